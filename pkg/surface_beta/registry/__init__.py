from .sqlite_registry import RegistryDB, RunInfo, Timer, config_hash, content_hash, sha256_file

__all__ = ["RegistryDB", "RunInfo", "Timer", "config_hash", "content_hash", "sha256_file"]
