import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    """Keep every test away from the working-directory cache."""
    monkeypatch.setenv("ALEXQ_CACHE", str(tmp_path / "alexq-cache"))
