from _abelcodec.config import set_max_word_length


def pytest_addoption(parser):  # type: ignore[no-untyped-def]
    parser.addoption(
        "--max-word-length",
        action="store",
        type=int,
        default=None,
        dest="MAX_WORD_LENGTH",
        help="Cap on the number of letters materialized during the tests.",
    )


def pytest_sessionstart(session):  # type: ignore[no-untyped-def]
    max_word_length = session.config.option.MAX_WORD_LENGTH
    if max_word_length is not None:
        set_max_word_length(max_word_length)
