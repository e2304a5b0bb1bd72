"""Built-in worked examples all hold, and the lookup API behaves."""

import time

import pytest

from burchkit.fixtures import EXAMPLES, run_all, run_example


def test_example_names():
    assert set(EXAMPLES) == {"e4.1", "e4.2", "e4.3", "e4.4", "e4.5", "r2.7"}


def test_every_claim_holds():
    for name, claims in run_all().items():
        assert claims, name
        for claim, ok in claims:
            assert ok, "%s: %s" % (name, claim)


def test_single_example_matches_run_all():
    assert run_example("e4.2") == run_all()["e4.2"]


def test_unknown_example_rejected():
    with pytest.raises(ValueError):
        run_example("e9.9")


def test_examples_are_fast():
    start = time.time()
    run_all()
    assert time.time() - start < 10.0
