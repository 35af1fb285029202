from .writers import provenance, read_frame, read_points_csv, write_frame, write_json, write_text

__all__ = ["provenance", "read_frame", "read_points_csv", "write_frame", "write_json", "write_text"]
