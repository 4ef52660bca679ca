import json

import pytest

from horoshift import (Direction, FullShift, InputError, ZdLp, ledrappier,
                       nd_set, parse_grid)
from horoshift.horoballs import PolyhedralZ2, polyhedral_from_ray
from horoshift.render import (ball_raster, direction_circle_svg,
                              lattice_set_svg, sublevel_raster, write_pgm)
from horoshift.serialize import (certificate_to_dict, coverage_report_to_dict,
                                 direction_from_dict, direction_to_dict,
                                 direction_to_vector_descriptor,
                                 group_from_dict, group_to_dict,
                                 horoball_from_dict, horoball_to_dict,
                                 json_dumps, nd_report_to_csv,
                                 nd_report_to_dict, parse_group, parse_spec,
                                 spec_hash, witness_vectors_from_report_dict)
from horoshift.separation import halfspace_coverage, uniform_probes


class TestPGM:
    def test_header_and_payload(self, tmp_path):
        path = tmp_path / "img.pgm"
        n = write_pgm(path, [[0, 128], [255, 1]])
        raw = path.read_bytes()
        assert raw.startswith(b"P5\n2 2\n255\n")
        assert raw[-4:] == bytes([0, 128, 255, 1])
        assert n == len(raw)

    def test_ragged_rejected(self, tmp_path):
        with pytest.raises(InputError):
            write_pgm(tmp_path / "bad.pgm", [[0, 1], [2]])
        with pytest.raises(InputError):
            write_pgm(tmp_path / "bad.pgm", [])

    def test_sublevel_raster_orientation(self):
        # H = {y < 0}: bottom rows dark, row 0 is y = N
        rows = sublevel_raster(PolyhedralZ2("halfplane-diagonal", side=1).sign, 2)
        # {x - y < 0} = upper-left triangle
        assert rows[0] == [0, 0, 0, 0, 255]   # y = 2
        assert rows[4] == [255] * 5           # y = -2

    def test_ball_raster_deterministic_and_exact(self, tmp_path):
        g = ZdLp(2, 1)
        rows = ball_raster(g, (5, 0), 2)
        again = ball_raster(g, (5, 0), 2)
        assert rows == again
        # membership d((5,0), p) < 5 checked independently
        for yi, y in enumerate(range(2, -3, -1)):
            for xi, x in enumerate(range(-2, 3)):
                inside = abs(x - 5) + abs(y) < 5
                assert (rows[yi][xi] == 0) == inside

    def test_pgm_bytes_stable(self, tmp_path):
        g = ZdLp(2, 1)
        a, b = tmp_path / "a.pgm", tmp_path / "b.pgm"
        write_pgm(a, ball_raster(g, (90, 0), 20))
        write_pgm(b, ball_raster(g, (90, 0), 20))
        assert a.read_bytes() == b.read_bytes()


class TestSVG:
    def test_direction_circle(self):
        report = nd_set(ledrappier(), 2, 4, grid=parse_grid("farey:1"),
                        grid_label="farey:1")
        svg = direction_circle_svg(report)
        assert svg.startswith("<svg")
        assert svg.count('fill="#c00"') == len(report.witness_directions())
        assert direction_circle_svg(report) == svg  # byte identical

    def test_lattice_set(self):
        svg = lattice_set_svg({(0, 0), (1, 2)}, 3, title="pts")
        assert svg.count("<circle") == 2
        assert "pts" in svg


class TestSerializers:
    def test_group_round_trip(self):
        for desc in ("z2-l1", "z3-l2", "z2-linf", "wfa-index", "dsz2-index"):
            g = parse_group(desc)
            d = group_to_dict(g)
            assert group_to_dict(group_from_dict(d)) == d

    def test_group_json_descriptor(self):
        g = parse_group('{"kind": "zd-lp", "dim": 3, "p": 1}')
        assert isinstance(g, ZdLp) and g.dim == 3 and g.p == 1

    def test_bad_group(self):
        with pytest.raises(InputError):
            parse_group("z2-l7")

    def test_horoball_round_trip(self):
        samples = [
            {"kind": "linear", "v": [1, 2]},
            {"kind": "halfplane-diagonal", "side": -1},
            {"kind": "quarter-space", "apex": [0, 0], "opening": "+x"},
        ]
        for d in samples:
            h = horoball_from_dict(d)
            assert horoball_to_dict(h) == d

    def test_sampled_horoball_descriptor(self):
        h = horoball_from_dict({"kind": "sampled-l1-ray", "ray": [1, 0],
                                "n_star": 64})
        assert h.j.value((3, 2)) == polyhedral_from_ray((1, 0)).value((3, 2))

    def test_spec_descriptors(self):
        assert parse_spec("ledrappier").to_dict() == ledrappier().to_dict()
        assert parse_spec("fullshift").alphabet == (0, 1)
        via_json = parse_spec(json.dumps(ledrappier().to_dict()))
        assert via_json.to_dict() == ledrappier().to_dict()
        assert spec_hash(via_json) == spec_hash(ledrappier())
        assert spec_hash(via_json) != spec_hash(FullShift((0, 1)))

    def test_direction_round_trip(self):
        d = Direction(1, 1, "sqrt-normalized")
        back = direction_from_dict(direction_to_dict(d))
        assert back == d and back.label == "sqrt-normalized"
        assert direction_to_vector_descriptor(back) == ["sqrt-normalized", 1, 1]
        assert direction_to_vector_descriptor(Direction(2, 1)) == [2, 1]

    def test_json_dumps_stable(self):
        s = json_dumps({"b": 1, "a": [1, 2]})
        assert s == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


class TestReportSerialization:
    def make_report(self):
        return nd_set(ledrappier(), 2, 5, grid=parse_grid("farey:1"),
                      grid_label="farey:1")

    def test_report_dict_shape(self):
        d = nd_report_to_dict(self.make_report())
        assert d["epsilon"] == {"dyadic": "2^-2", "value": 0.25}
        assert len(d["entries"]) == 8
        assert d["metadata"]["grid"] == "farey:1"
        assert "spec_hash" in d["metadata"]
        wit = {(w["a"], w["b"]) for w in d["witness_directions"]}
        assert wit == {(0, -1), (-1, 0), (1, 1)}
        # everything must be json-serializable with stable output
        assert json_dumps(d) == json_dumps(json.loads(json_dumps(d)))

    def test_certificate_dicts(self):
        report = self.make_report()
        for direction, cert in report.entries:
            d = certificate_to_dict(cert)
            assert d["kind"] == cert.kind
            if cert.kind == "witness":
                assert d["extendable"] is True
                assert len(d["pair"]) == 2
                assert d["pair"][0]["N"] == cert.N

    def test_csv_format(self):
        csv = nd_report_to_csv(self.make_report())
        lines = csv.strip().split("\n")
        assert lines[0] == "a,b,label,certificate,extendable"
        assert len(lines) == 9
        assert "0,-1,rational,witness,True" in lines

    def test_witness_vectors_from_dict(self):
        d = nd_report_to_dict(self.make_report())
        vecs = witness_vectors_from_report_dict(d)
        assert [1, 1] in vecs or ["sqrt-normalized", 1, 1] in vecs
        assert len(vecs) == 3

    def test_witness_vectors_require_witnesses(self):
        report = nd_set(FullShift((0, 1)), 2, 4, grid=parse_grid("1,0"),
                        grid_label="single")
        d = nd_report_to_dict(report)
        assert witness_vectors_from_report_dict(d) == [[1, 0]]
        d["entries"] = []
        with pytest.raises(InputError):
            witness_vectors_from_report_dict(d)

    def test_coverage_report_dict(self):
        rep = halfspace_coverage([(1, 0), (0, 1)], uniform_probes(8))
        d = coverage_report_to_dict(rep)
        assert d["covered"] is False and d["probes"] == 8
        assert d["failing_probes"]
