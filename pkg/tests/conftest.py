import pytest

from uvstar import Era, build_dataset, load_manifest
from uvstar.ingest import bundled_manifest_path


@pytest.fixture(scope="session")
def manifest():
    return load_manifest(bundled_manifest_path())


@pytest.fixture(scope="session")
def postwar(manifest):
    pairs, _ = build_dataset(manifest, Era.POSTWAR)
    return pairs


@pytest.fixture(scope="session")
def pandemic(manifest):
    pairs, _ = build_dataset(manifest, Era.PANDEMIC)
    return pairs


@pytest.fixture(scope="session")
def historical(manifest):
    pairs, _ = build_dataset(manifest, Era.HISTORICAL)
    return pairs


@pytest.fixture(scope="session")
def full_sample(manifest):
    pairs, _ = build_dataset(manifest, Era.FULL)
    return pairs
