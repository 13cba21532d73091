import json

import numpy as np
import pytest

from ccsk.oracle import RngState, random_params, random_unitary
from ccsk.serialize import (ParseError, matrix_from_doc, matrix_to_doc,
                            params_from_doc, params_to_doc, read_matrix,
                            read_params, write_matrix, write_params)


class TestMatrixFormat:
    def test_roundtrip_bit_exact(self, tmp_path, rng):
        u = random_unitary(5, rng)
        path = tmp_path / "u.json"
        write_matrix(path, u)
        np.testing.assert_array_equal(read_matrix(path), u)

    def test_doc_shape(self):
        doc = matrix_to_doc(np.eye(2, dtype=complex))
        assert doc["type"] == "cmatrix"
        assert doc["n"] == 2
        assert doc["rows"][0][0] == [1.0, 0.0]

    def test_rejects_wrong_type_tag(self):
        with pytest.raises(ParseError, match="cmatrix"):
            matrix_from_doc({"type": "params", "n": 1, "rows": [[[0, 0]]]})

    def test_rejects_bad_entry(self):
        with pytest.raises(ParseError, match=r"rows\[0\]\[1\]"):
            matrix_from_doc({"type": "cmatrix", "n": 2,
                             "rows": [[[1, 0], "x"], [[0, 0], [1, 0]]]})

    def test_rejects_row_count_mismatch(self):
        with pytest.raises(ParseError, match="rows"):
            matrix_from_doc({"type": "cmatrix", "n": 3, "rows": [[[1, 0]]]})

    def test_rejects_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ParseError, match="invalid JSON"):
            read_matrix(path)


class TestParamsFormat:
    def test_roundtrip_bit_exact(self, tmp_path, rng):
        p = random_params(6, rng)
        path = tmp_path / "p.json"
        write_params(path, p)
        q = read_params(path)
        np.testing.assert_array_equal(q.thetas, p.thetas)
        for a, b in zip(q.z_columns, p.z_columns):
            np.testing.assert_array_equal(a, b)

    def test_column_lengths_enforced(self):
        with pytest.raises(ParseError, match=r"z\[1\]"):
            params_from_doc({"type": "ccsk_params", "n": 3,
                             "thetas": [0, 0, 0],
                             "z": [[[0, 0]], [[0, 0]]]})

    def test_n1_empty_z(self):
        p = params_from_doc({"type": "ccsk_params", "n": 1,
                             "thetas": [0.25], "z": []})
        assert p.n == 1 and p.thetas[0] == 0.25

    def test_doc_roundtrip_through_json_text(self, rng):
        p = random_params(4, rng)
        text = json.dumps(params_to_doc(p))
        q = params_from_doc(json.loads(text))
        np.testing.assert_array_equal(q.thetas, p.thetas)

    def test_serialized_repeatably(self, tmp_path, rng):
        p = random_params(4, rng)
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        write_params(a, p)
        write_params(b, p)
        assert a.read_bytes() == b.read_bytes()
