import functools
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from tamecluster.instances import bundled  # noqa: E402


@functools.lru_cache(maxsize=None)
def instance(name: str):
    """(spec, tilting module) for a bundled instance, cached per session."""
    spec = bundled(name)
    return spec, spec.tilting_module()


@functools.lru_cache(maxsize=None)
def generator(name: str, cogenerator: bool | None = None, slice_power: int | None = None):
    from tamecluster.generator import build_generator
    spec, T = instance(name)
    cog = spec.options["cogenerator"] if cogenerator is None else cogenerator
    return build_generator(T, cog, slice_power=slice_power)


@pytest.fixture
def inst():
    return instance


@pytest.fixture
def gen():
    return generator


ACCEPTANCE: list[str] = []


def record(criterion: int, ok: bool, detail: str, seconds: float | None = None):
    t = f" ({seconds:.1f} s)" if seconds is not None else ""
    ACCEPTANCE.append(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}{t} {detail}")


@functools.lru_cache(maxsize=None)
def verify_json(name: str):
    """JSON report of ``tamecluster verify`` on a bundled instance, with exit code and runtime."""
    import io
    import json
    import tempfile
    import time
    from tamecluster.cli import main
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "v.json")
        t = time.perf_counter()
        code = main(["verify", "--spec", name, "--json", path], out=io.StringIO())
        dt = time.perf_counter() - t
        with open(path) as f:
            return code, json.load(f), dt


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
