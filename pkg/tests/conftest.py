from premonoid.transformations import parse_images


def T(text):
    """1-based image text to a 0-based tuple, e.g. T("2,3,2") == (1, 2, 1)."""
    return parse_images(text)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[key])
