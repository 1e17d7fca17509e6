"""Tests for point file parsing and geometry writers and readers."""

import json

import pytest
import shapely
import shapely.geometry
import shapely.wkt

from errors import GeometryParseError, PointParseError
from extraction import extract_multipolygon
from geometry.primitives import signed_area
from geometry.point import PointSet
from models import FilterConfig, LinearRing, MultiPolygon, Polygon
from serialization import (
    parse_csv,
    parse_geojson,
    parse_points,
    read_geometry,
    serialize,
    to_geojson,
    to_svg,
    to_wkt,
)
from ui.styles import HOLE_ORANGE, SHELL_GREEN


@pytest.fixture
def annulus(square_annulus_points, annulus_config):
    mp, _ = extract_multipolygon(square_annulus_points, annulus_config)
    return mp, square_annulus_points


class TestParseCsv:
    """Tests for parse_csv."""

    def test_plain(self):
        """Should read one pair per line."""
        ps = parse_csv("0,0\n1,0\n0,1\n")
        assert len(ps) == 3
        assert ps[2].y == 1.0

    def test_header(self):
        """Should skip an optional x,y header."""
        with_header = parse_csv("x,y\n0,0\n1,0\n0,1\n")
        assert with_header.xy.tolist() == parse_csv("0,0\n1,0\n0,1\n").xy.tolist()

    def test_blank_lines(self):
        """Should ignore blank lines."""
        assert len(parse_csv("0,0\n\n1,0\n0,1\n\n")) == 3

    def test_bad_number(self):
        """Should cite the line of a malformed row."""
        with pytest.raises(PointParseError, match="line 2") as exc_info:
            parse_csv("0,0\n1,abc\n")
        assert exc_info.value.line == 2

    def test_wrong_arity(self):
        """Should reject rows without exactly two values."""
        with pytest.raises(PointParseError, match="line 3"):
            parse_csv("0,0\n1,0\n1,2,3\n")

    def test_non_finite(self):
        """Should reject NaN and infinity."""
        with pytest.raises(PointParseError, match="line 1"):
            parse_csv("nan,0\n")

    def test_duplicate(self):
        """Should name both lines of a duplicated point."""
        with pytest.raises(PointParseError, match="line 3") as exc_info:
            parse_csv("0,0\n1,1\n0,0\n")
        assert "line 1" in str(exc_info.value)


class TestParseGeojson:
    """Tests for parse_geojson."""

    def test_feature_collection(self):
        """Should read Point features in order."""
        doc = {
            "type": "FeatureCollection",
            "features": [
                {"type": "Feature", "geometry": {"type": "Point", "coordinates": [x, y]}}
                for x, y in [(0, 0), (1, 0), (0, 1)]
            ],
        }
        ps = parse_geojson(json.dumps(doc))
        assert ps.xy.tolist() == [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]

    def test_multipoint(self):
        """Should read a bare or wrapped MultiPoint."""
        geometry = {"type": "MultiPoint", "coordinates": [[0, 0], [1, 0], [0, 1]]}
        assert len(parse_geojson(json.dumps(geometry))) == 3
        feature = {"type": "Feature", "geometry": geometry}
        assert len(parse_geojson(json.dumps(feature))) == 3

    def test_bad_feature(self):
        """Should cite the feature index."""
        doc = {
            "type": "FeatureCollection",
            "features": [
                {"type": "Feature", "geometry": {"type": "Point", "coordinates": [0, 0]}},
                {"type": "Feature", "geometry": {"type": "LineString", "coordinates": []}},
            ],
        }
        with pytest.raises(PointParseError, match="feature 1") as exc_info:
            parse_geojson(json.dumps(doc))
        assert exc_info.value.feature == 1

    def test_positions_with_elevation(self):
        """Should keep x and y and drop further ordinates."""
        geometry = {"type": "MultiPoint", "coordinates": [[0, 0, 5], [1, 0, 6, 7], [0, 1]]}
        assert parse_geojson(json.dumps(geometry)).xy.tolist() == [[0, 0], [1, 0], [0, 1]]
        doc = {
            "type": "FeatureCollection",
            "features": [
                {"type": "Feature", "geometry": {"type": "Point", "coordinates": [x, y, 9.5]}}
                for x, y in [(0, 0), (1, 0), (0, 1)]
            ],
        }
        assert parse_geojson(json.dumps(doc)).xy.tolist() == [[0, 0], [1, 0], [0, 1]]

    def test_short_position(self):
        """Should still reject a position with a single ordinate."""
        with pytest.raises(PointParseError, match="coordinate 1"):
            parse_geojson(json.dumps({"type": "MultiPoint", "coordinates": [[0, 0], [1]]}))

    def test_invalid_json(self):
        """Should report malformed JSON."""
        with pytest.raises(PointParseError):
            parse_geojson("{not json")

    def test_unsupported_type(self):
        """Should reject geometry that is not points."""
        with pytest.raises(PointParseError):
            parse_geojson(json.dumps({"type": "Polygon", "coordinates": []}))


class TestParsePoints:
    """Tests for parse_points."""

    def test_format_from_extension(self, points_csv):
        """Should pick the parser from the file extension."""
        assert len(parse_points(points_csv)) == 72

    def test_unknown_extension(self, tmp_path):
        """Should ask for an explicit format."""
        path = tmp_path / "points.txt"
        path.write_text("0,0\n1,0\n0,1\n")
        with pytest.raises(PointParseError):
            parse_points(path)
        assert len(parse_points(path, "csv")) == 3

    def test_missing_file(self, tmp_path):
        """Should report an unreadable file as a parse error."""
        with pytest.raises(PointParseError):
            parse_points(tmp_path / "missing.csv")

    def test_not_utf8(self, tmp_path):
        """Should report undecodable bytes as a parse error."""
        path = tmp_path / "points.csv"
        path.write_bytes(b"0,0\n1,0\n\xe9,1\n")
        with pytest.raises(PointParseError, match="UTF-8"):
            parse_points(path)


class TestWkt:
    """Tests for to_wkt."""

    def test_unit_square(self, unit_square):
        """Should write a closed POLYGON."""
        mp, ps = unit_square
        assert to_wkt(mp, ps) == "POLYGON ((0 0, 1 0, 1 1, 0 1, 0 0))"

    def test_empty(self, unit_square_points):
        """Should write MULTIPOLYGON EMPTY."""
        assert to_wkt(MultiPolygon(), unit_square_points) == "MULTIPOLYGON EMPTY"

    def test_multipolygon(self, two_clusters):
        """Should write MULTIPOLYGON for several polygons."""
        mp, _ = extract_multipolygon(two_clusters, FilterConfig(l_max=1.5))
        text = to_wkt(mp, two_clusters)
        assert text.startswith("MULTIPOLYGON (((")
        assert shapely.wkt.loads(text).area == pytest.approx(8.0)

    def test_precision(self):
        """Should write the requested significant digits."""
        ps = PointSet.from_points([(0, 0), (1 / 3, 0), (0, 2 / 3)])
        mp = MultiPolygon(polygons=[Polygon(shell=LinearRing(indices=[0, 1, 2]))])
        assert "0.333 0" in to_wkt(mp, ps, precision=3)
        assert "0.333333333 0" in to_wkt(mp, ps)

    def test_round_trip(self, annulus):
        """Should re-parse into the same shape with shapely."""
        mp, ps = annulus
        geom = shapely.wkt.loads(to_wkt(mp, ps))
        assert geom.is_valid
        assert geom.area == pytest.approx(50.0)
        assert len(geom.interiors) == 1


class TestGeojson:
    """Tests for to_geojson."""

    def test_feature(self, annulus):
        """Should write one Polygon feature with two rings."""
        mp, ps = annulus
        doc = json.loads(to_geojson(mp, ps))
        assert doc["type"] == "Feature"
        assert doc["geometry"]["type"] == "Polygon"
        assert len(doc["geometry"]["coordinates"]) == 2
        assert doc["properties"] == {"polygons": 1, "holes": 1}

    def test_ring_orientation(self, annulus):
        """Should keep the exterior counterclockwise and the hole clockwise."""
        mp, ps = annulus
        doc = json.loads(to_geojson(mp, ps))
        exterior, interior = doc["geometry"]["coordinates"]
        assert exterior[0] == exterior[-1]
        assert shapely.LinearRing(exterior).is_ccw
        assert not shapely.LinearRing(interior).is_ccw
        assert signed_area(mp.polygons[0].holes[0], ps) < 0

    def test_empty(self, unit_square_points):
        """Should write an empty MultiPolygon geometry."""
        doc = json.loads(to_geojson(MultiPolygon(), unit_square_points))
        assert doc["geometry"] == {"type": "MultiPolygon", "coordinates": []}

    def test_round_trip(self, annulus):
        """Should re-parse into the same shape with shapely."""
        mp, ps = annulus
        geom = shapely.geometry.shape(json.loads(to_geojson(mp, ps))["geometry"])
        assert geom.equals(shapely.wkt.loads(to_wkt(mp, ps)))


class TestSvg:
    """Tests for to_svg."""

    def test_styling(self, annulus):
        """Should fill shells green and outline holes orange."""
        mp, ps = annulus
        svg = to_svg(mp, ps)
        assert svg.startswith("<svg")
        assert 'fill-rule="evenodd"' in svg
        assert SHELL_GREEN in svg
        assert HOLE_ORANGE in svg
        assert "viewBox=" in svg

    def test_serialize_bytes(self, annulus):
        """Should return encoded text for every format."""
        mp, ps = annulus
        for fmt in ("wkt", "geojson", "svg"):
            assert isinstance(serialize(mp, ps, fmt), bytes)
        with pytest.raises(ValueError):
            serialize(mp, ps, "kml")


class TestReadGeometry:
    """Tests for read_geometry."""

    def test_wkt_file(self, tmp_path):
        """Should index rings against distinct coordinates."""
        path = tmp_path / "shape.wkt"
        path.write_text("POLYGON ((0 0, 10 0, 10 10, 0 10, 0 0), (4 4, 4 6, 6 6, 6 4, 4 4))")
        mp, ps = read_geometry(path)
        assert len(ps) == 8
        assert len(mp.polygons[0].holes) == 1
        assert signed_area(mp.polygons[0].shell, ps) == 100.0

    def test_geojson_feature_collection(self, tmp_path, annulus):
        """Should read every polygon feature."""
        mp, ps = annulus
        feature = json.loads(to_geojson(mp, ps))
        path = tmp_path / "shape.geojson"
        path.write_text(json.dumps({"type": "FeatureCollection", "features": [feature, feature]}))
        read, _ = read_geometry(path)
        assert len(read) == 2

    def test_rejects_lines(self, tmp_path):
        """Should only accept polygonal geometry."""
        path = tmp_path / "line.wkt"
        path.write_text("LINESTRING (0 0, 1 1)")
        with pytest.raises(GeometryParseError):
            read_geometry(path)

    def test_bad_wkt(self, tmp_path):
        """Should report malformed WKT."""
        path = tmp_path / "bad.wkt"
        path.write_text("POLYGON ((0 0, 1")
        with pytest.raises(GeometryParseError):
            read_geometry(path)

    def test_not_utf8(self, tmp_path):
        """Should report undecodable bytes as a geometry parse error."""
        path = tmp_path / "shape.wkt"
        path.write_bytes(b"POLYGON ((0 0, 1 0, 1 1, 0 0))\xff")
        with pytest.raises(GeometryParseError, match="UTF-8"):
            read_geometry(path)

    def test_geojson_with_elevation(self, tmp_path):
        """Should read polygon rings whose positions carry z."""
        path = tmp_path / "shape.geojson"
        ring = [[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1], [0, 0, 1]]
        path.write_text(json.dumps({"type": "Polygon", "coordinates": [ring]}))
        mp, ps = read_geometry(path)
        assert ps.xy.tolist() == [[0, 0], [1, 0], [1, 1], [0, 1]]
        assert signed_area(mp.polygons[0].shell, ps) == 1.0
