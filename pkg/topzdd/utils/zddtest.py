__all__ = ["zddtest"]

from typing import Optional

from topzdd.ZddStore import ZddStore, Terminal, TOP


def zddtest(
    tz,
    store: ZddStore,
    root: int,
    raiseerror: bool = True,
    verb: bool = False,
) -> bool:
    r"""Equivalence test.

    Verify that a compressed ZDD describes the same diagram as its
    source: both are written as preorder-named edge lists
    :math:`(\ell(x), \mathrm{zero}(x), \mathrm{one}(x))` for
    :math:`x = 1, \dots, n` and compared entry by entry. This test can help
    to detect errors anywhere in the compression pipeline.

    Parameters
    ----------
    tz : :obj:`topzdd.TopZdd`
        Compressed ZDD to test.
    store : :obj:`topzdd.ZddStore`
        Store holding the source ZDD.
    root : :obj:`int`
        Root handle of the source ZDD.
    raiseerror : :obj:`bool`, optional
        Raise error or simply return ``False`` when the test fails
    verb : :obj:`bool`, optional
        Verbosity

    Returns
    -------
    passed : :obj:`bool`
        Passed flag.

    Raises
    ------
    AssertionError
        If the edge lists differ.

    """
    expected = store.preorder_edges(root)
    got = tz.decompress_all()

    first: Optional[int] = None
    for x, (a, b) in enumerate(zip(expected, got), start=1):
        if a != b:
            first = x
            break
    if first is None and len(expected) != len(got):
        first = min(len(expected), len(got)) + 1
    terminal = Terminal.TOP if root == TOP else Terminal.BOT
    terminal_ok = bool(expected) or tz.root_terminal is terminal
    passed = first is None and terminal_ok

    # verbosity or error raising
    if (not passed and raiseerror) or verb:
        if passed:
            msg = f"Equivalence test passed, {len(expected)} nodes"
        elif first is None:
            msg = f"Equivalence test failed, terminal family {tz.root_terminal!r} differs"
        else:
            want = expected[first - 1] if first <= len(expected) else None
            have = got[first - 1] if first <= len(got) else None
            msg = f"Equivalence test failed at preorder {first}: expected {want}, got {have}"
        if not passed and raiseerror:
            raise AssertionError(msg)
        else:
            print(msg)

    return passed
