from pathlib import Path

from core.paths import AppPaths, app_paths
from core.reports import MARKDOWN_TEMPLATE


def test_app_root_is_the_source_tree():
    assert app_paths.app_root.resolve() == Path(__file__).resolve().parent.parent
    assert (app_paths.templates_dir / MARKDOWN_TEMPLATE).is_file()


def test_datasets_dir_override(monkeypatch, tmp_path):
    monkeypatch.setenv(AppPaths.DATASETS_ENV, str(tmp_path))
    assert AppPaths().datasets_dir == tmp_path


def test_resolve_output_creates_parents(tmp_path):
    target = app_paths.resolve_output(str(tmp_path / "a" / "b" / "report.csv"))
    assert target.parent.is_dir()
    assert not target.exists()
