import json
from collections import Counter

import mpmath
import pytest

from ramanujan_pi.catalog import (
    emit_certificate,
    format_catalog,
    load_catalog,
    parse_catalog,
    read_certificate,
)
from ramanujan_pi.errors import ParseError, ValidationError
from ramanujan_pi.exactnum import Surd
from ramanujan_pi.ramanujan import Certificate, SeriesSpec, Verdict, certificate_to_dict, prove_series

SERIES_BLOCK = """[series]
name = {name}
level = 2
degree = 5
z = 1/81
a = 4/(9*sqrt(2))
b = {b}
"""


class TestShippedCatalog:
    def test_row_counts(self, catalog):
        assert len(catalog.series) == 36
        assert len(catalog.transformations) == 1
        per_level = Counter(s.level.ell for s in catalog.series)
        assert per_level == {4: 4, 2: 12, 3: 9, 1: 11}

    def test_every_row_has_degree_and_sign(self, catalog):
        for s in catalog.series:
            assert s.d is not None
            assert s.sign in ("positive", "negative")

    def test_alternating_rows_allow_conjecture(self, catalog):
        for s in catalog.series:
            if s.alternating:
                assert 4 * s.d > s.level.ell

    def test_aliases(self, catalog):
        assert catalog.find("series-26390n+1103").name == "l2-d29-pos"
        with pytest.raises(KeyError):
            catalog.find("nope")

    def test_round_trip(self, catalog):
        assert parse_catalog(format_catalog(catalog)) == catalog
        text = format_catalog(catalog)
        assert format_catalog(parse_catalog(text)) == text


class TestParsing:
    def test_empty(self):
        cat = parse_catalog("")
        assert cat.series == [] and cat.transformations == []

    def test_sqrt_canonicalized(self):
        cat = parse_catalog(SERIES_BLOCK.format(name="x", b="sqrt(8)"))
        assert cat.series[0].b == 2 * Surd.sqrt(2)
        assert "b = 2*sqrt(2)" in format_catalog(cat)

    def test_duplicate_names(self):
        text = SERIES_BLOCK.format(name="x", b="1") + SERIES_BLOCK.format(name="x", b="2")
        with pytest.raises(ParseError, match="duplicate name"):
            parse_catalog(text)

    def test_error_position(self):
        text = SERIES_BLOCK.format(name="x", b="40/(9*sqrt(2)) + 1.5")
        with pytest.raises(ParseError) as err:
            parse_catalog(text)
        assert err.value.line == 7
        assert err.value.column == len("b = 40/(9*sqrt(2)) + ") + 1

    @pytest.mark.parametrize("text,line", [
        ("[nonsense]\n", 1),
        ("name = x\n", 1),
        ("[series]\nname = x\nlevel = 5\nz = 1/81\na = 1\nb = 1\n", 3),
        ("[series]\nname = x\ncolour = red\n", 3),
        ("[series]\nname = x\nlevel = 2\nsign = negative\nz = 1/81\na = 1\nb = 1\n", 4),
        ("[series]\nname = x\nname = y\n", 3),
        ("\n\n[series\n", 3),
    ])
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_catalog(text)
        assert err.value.line == line

    def test_missing_keys(self):
        with pytest.raises(ParseError, match="missing"):
            parse_catalog("[series]\nname = x\n")

    def test_bad_transformation_is_named(self, tmp_path):
        text = """[transformation]
name = wrong-one
level = 2
degree = 5
alpha = 64*x^5*(1+x)/((1+4*x^2)*(1-2*x-4*x^2)^2)
beta = 64*x*(1+x)^5/((1+4*x^2)*(1+22*x-4*x^2)^2)
m_squared = 2*(1-2*x-4*x^2)/(1+22*x-4*x^2)
"""
        path = tmp_path / "bad.catalog"
        path.write_text(text)
        with pytest.raises(ValidationError, match="wrong-one"):
            load_catalog(path)
        assert load_catalog(path, validate=False).transformations[0].name == "wrong-one"

    def test_load_from_path(self, tmp_path, catalog):
        path = tmp_path / "copy.catalog"
        path.write_text(format_catalog(catalog))
        assert load_catalog(path, validate=False) == catalog


class TestCertificates:
    def test_positive_certificate(self, catalog, tmp_path):
        c = prove_series(catalog.find("series-10n+1"), catalog)
        path = tmp_path / "c.json"
        record = emit_certificate(c, path)
        assert json.loads(path.read_text()) == record
        assert certificate_to_dict(read_certificate(path)) == record
        assert record["schema_version"] == 1
        assert record["derived_b"]["exact"] == "20/9*sqrt(2)"

    def test_alternating_certificate_has_C(self, catalog, tmp_path):
        c = prove_series(catalog.find("series-28n+3"), catalog)
        record = emit_certificate(c, tmp_path / "c.json")
        assert record["C"]["exact"] == "1/3"
        assert record["solution"]["m0"]["exact"] == "3/10*sqrt(2)+(1/10*sqrt(2))*i"

    def test_numeric_fields_keep_full_digits(self, catalog, tmp_path):
        s = catalog.find("series-10n+1")
        with mpmath.workdps(80):
            c = Certificate(series=s, verdict=Verdict.VERIFIED_ONLY, digits=50, q=mpmath.exp(-mpmath.pi))
            record = emit_certificate(c, tmp_path / "n.json")
        digits = record["q"]["decimal"].replace("0.", "", 1).lstrip("0")
        assert len(digits) == 50
        assert "exact" not in record["q"]

    def test_unwritable_path(self, catalog, tmp_path):
        c = Certificate(series=catalog.find("series-10n+1"), verdict=Verdict.FAILED, digits=50)
        with pytest.raises(OSError):
            emit_certificate(c, tmp_path / "missing" / "c.json")

    def test_schema_version_checked(self, catalog, tmp_path):
        c = Certificate(series=catalog.find("series-10n+1"), verdict=Verdict.FAILED, digits=50)
        path = tmp_path / "c.json"
        rec = emit_certificate(c, path)
        rec["schema_version"] = 99
        path.write_text(json.dumps(rec))
        with pytest.raises(ValueError):
            read_certificate(path)


def test_series_spec_is_hashable(catalog):
    assert len({s for s in catalog.series}) == 36
    assert isinstance(catalog.series[0], SeriesSpec)
