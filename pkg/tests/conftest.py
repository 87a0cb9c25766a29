import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # lets fixtures see whether the test body passed
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
