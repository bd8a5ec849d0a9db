"""
Application paths management.
Uses platformdirs so logs and optional datasets live in user-writable locations.
"""

import os
from pathlib import Path
from platformdirs import user_data_dir


class AppPaths:
    """Centralized path management for the toolkit."""

    APP_NAME = "DominationBench"
    APP_AUTHOR = "DominationBench"
    DATASETS_ENV = "DOMSET_DATA_DIR"

    def __init__(self):
        self.app_root = Path(__file__).parent.parent.parent

    @property
    def data_dir(self) -> Path:
        """User data directory for logs and datasets."""
        data_path = Path(user_data_dir(self.APP_NAME, self.APP_AUTHOR))
        data_path.mkdir(parents=True, exist_ok=True)
        return data_path

    @property
    def logs_dir(self) -> Path:
        """Directory holding the daily and rotating debug logs."""
        logs_path = self.data_dir / "logs"
        logs_path.mkdir(parents=True, exist_ok=True)
        return logs_path

    @property
    def templates_dir(self) -> Path:
        """Jinja2 templates for Markdown reports."""
        return self.app_root / "app" / "reports"

    @property
    def datasets_dir(self) -> Path:
        """
        Root of the optional real-world datasets (Google+, Pokec, DIMACS).

        Not created on access: acquisition is the user's job, and a missing
        directory simply means the real-data fixtures are skipped.
        """
        override = os.environ.get(self.DATASETS_ENV)
        if override:
            return Path(override)
        return self.data_dir / "datasets"

    def resolve_output(self, path: str) -> Path:
        """Path for a file the CLI writes; missing parent directories are created."""
        out = Path(path).expanduser()
        out.parent.mkdir(parents=True, exist_ok=True)
        return out


# Global instance
app_paths = AppPaths()
