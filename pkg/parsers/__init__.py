from .point_parser import PointFileParser, parse_points, read_points
