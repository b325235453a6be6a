def pytest_addoption(parser):
    """Add a program argument option for running slow tests with pytest.

    note: this is not related to invoke
    """
    parser.addoption(
        "--slow",
        action="store_true",
        dest="slow",
        default=False,
        help="enable slow tests",
    )


def pytest_configure(config):
    """Set tests marked as slow not to run by default."""
    if not config.option.slow:
        setattr(config.option, "markexpr", "not slow")
