import kquasi as kq


def test00_every_named_example_holds():
    verdicts = kq.report_named_examples()
    assert len(verdicts) == len(kq.NAMED_EXAMPLES) == 11
    failed = [v.to_dict() for v in verdicts if not v.passed]
    assert failed == []


def test01_names_are_unique():
    names = [example.name for example in kq.NAMED_EXAMPLES]
    assert len(set(names)) == len(names)


def test02_order_eight(order_eight):
    assert kq.is_quasigroup(order_eight)
    assert not order_eight.is_idempotent()
    translatable = [kind for kind, t in kq.all_parastrophes(order_eight).items()
                    if len(kq.translatability(t))]
    assert translatable == [kq.ParastropheKind.Dual]
