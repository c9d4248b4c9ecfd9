import pytest


@pytest.fixture(scope="session", autouse=True)
def setup_kquasi():
    # Sweeps run in-process unless a test asks for workers
    import kquasi as kq
    kq.set_worker_count(1)
    kq.set_log_level(kq.LogLevel.Warn)


@pytest.fixture
def quad13():
    """3x + 11y mod 13: quadratical and C3, 8-translatable."""
    import kquasi as kq
    return kq.build(13, 3, 11)


@pytest.fixture
def quad5():
    """2x + 4y mod 5: quadratical and right modular, 2-translatable."""
    import kquasi as kq
    return kq.build(5, 2, 4)


@pytest.fixture
def order_eight():
    import kquasi as kq
    from kquasi.catalogue import ORDER_EIGHT_K, ORDER_EIGHT_ROW
    return kq.from_translatable_sequence(ORDER_EIGHT_ROW, ORDER_EIGHT_K)


@pytest.fixture
def workers():
    """Restores the worker count a test changed."""
    import kquasi as kq
    count = kq.worker_count()
    yield kq.set_worker_count
    kq.set_worker_count(count)
