"""Named example models.

Each entry is stored in the text format and parsed on every load, so callers
always get a fresh object.  ``write_models`` dumps the whole catalog as
``.iolts`` files (``vending/S1`` becomes ``vending-S1.iolts``).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .algebra import parallel_compose, selfloop_complete
from .errors import UnknownFixtureError
from .formats import parse_iolts, write_iolts
from .lts import Iolts


@dataclass(frozen=True)
class Fixture:
    name: str
    note: str
    text: str


_VENDING_S1 = """\
iolts S1
inputs coin utee ucoffee umilk done
outputs mtee mcoffee mcoffeemilk msg
init 1
1 coin? 2
2 utee? 3
2 ucoffee? 4
4 umilk? 5
3 mtee! 6
4 mcoffee! 6
5 mcoffeemilk! 6
6 done? 7
7 msg! 1
"""

_VENDING_S2 = """\
iolts S2
inputs mtee mcoffee mcoffeemilk
outputs coffee coffeemilk done
init A
A mcoffee? B
A mcoffeemilk? C
B coffee! D
C coffeemilk! D
D done! A
"""

_VENDING_I2 = """\
iolts I2
inputs mtee mcoffee mcoffeemilk
outputs coffee coffeemilk done
init A
A mtee? B
A mcoffee? B
A mcoffeemilk? C
B coffee! D
C coffeemilk! D
D done! A
B mtee? B
B mcoffee? B
B mcoffeemilk? B
C mtee? C
C mcoffee? C
C mcoffeemilk? C
D mtee? D
D mcoffee? D
D mcoffeemilk? D
"""

_UCE_S1 = """\
iolts S1
inputs x
outputs
init 1
1 x? 2
"""

_UCE_I1 = """\
iolts I1
inputs x
outputs
init 1
1 x? 2
2 x? 2
"""

_UCE_S2 = """\
iolts S2
inputs
outputs x
init A
A x! B
B x! C
"""

_HCE_S = """\
iolts S
inputs i
outputs a b
init 1
1 a! 2
2 i? 3
"""

_HCE_I = """\
iolts I
inputs i
outputs a b
init A
A a! B
A i? D
B i? C
C i? C
D b! E
D i? D
E i? E
"""

# sender: Put, then DataN until AckN; a timeout (tau) resends, stale acks are absorbed
_ALTBIT_A = """\
iolts A
inputs Put Ack0 Ack1
outputs Data0 Data1
init 0
0 Put? 1
1 Data0! 2
2 Ack0? 3
2 tau 1
2 Ack1? 2
3 Put? 4
3 Ack0? 3
4 Data1! 5
5 Ack1? 0
5 Ack0? 5
"""

# receiver: deliver on fresh data, re-acknowledge on duplicates
_ALTBIT_B = """\
iolts B
inputs Data0 Data1
outputs Received Ack0 Ack1
init 0
0 Data0? 1
0 tau 5
1 Received! 2
1 tau 0
2 Ack0! 3
3 Data1? 4
3 Data0? 2
3 tau 2
4 Received! 5
5 Ack1! 0
"""

_ALTBIT_DRAWN = """\
iolts AB
inputs Put
outputs Ack0 Ack1 Data0 Data1 Received
init 0
0 Ack1! 0
0 Put? 1
1 Ack1! 1
1 Data0! 2
2 Received! 3
2 tau 4
3 tau 5
3 Ack0! 6
4 Received! 5
4 Data0! 2
5 Data0! 3
5 Ack0! 6
6 Ack0! 6
6 Put? 7
7 Data1! 8
7 Ack0! 7
8 Received! 9
8 tau 10
9 Ack1! 0
9 tau 11
10 Received! 11
10 Data1! 8
11 Ack1! 0
11 Data1! 9
"""

_VENDING_NOTE = "coffee machine: user interface S1 and brewing back end S2"

_CATALOG = {
    "vending/S1": Fixture("vending/S1", _VENDING_NOTE + "; 7 states, 9 transitions, all drinks end in 6", _VENDING_S1),
    "vending/S2": Fixture("vending/S2", _VENDING_NOTE + "; tee requests are left unspecified", _VENDING_S2),
    "vending/I2": Fixture("vending/I2", "back end implementation that serves coffee on mtee and ignores surplus requests",
                          _VENDING_I2),
    "uioco-ce/S1": Fixture("uioco-ce/S1", "uioco composition counterexample, specification of the consumer", _UCE_S1),
    "uioco-ce/I1": Fixture("uioco-ce/I1", "uioco composition counterexample, receptive consumer", _UCE_I1),
    "uioco-ce/S2": Fixture("uioco-ce/S2", "uioco composition counterexample, producer emitting x twice", _UCE_S2),
    "uioco-ce/I2": Fixture("uioco-ce/I2", "uioco composition counterexample, producer implementation", _UCE_S2.replace("S2", "I2", 1)),
    "hide-ce/S": Fixture("hide-ce/S", "uioco hiding counterexample, specification (b declared but unused)", _HCE_S),
    "hide-ce/I": Fixture("hide-ce/I", "uioco hiding counterexample, implementation", _HCE_I),
    "altbit/A": Fixture("altbit/A", "alternating-bit sender; shape reconstructed; sizes pinned (6 states, 10 transitions)",
                        _ALTBIT_A),
    "altbit/B": Fixture("altbit/B", "alternating-bit receiver; shape reconstructed; sizes pinned (6 states, 10 transitions)",
                        _ALTBIT_B),
    "altbit/composite-drawn": Fixture("altbit/composite-drawn",
                                      "alternating-bit composite as drawn (12 states, 24 transitions)", _ALTBIT_DRAWN),
}

_DERIVED = {
    "vending/I1": ("receptive user interface: S1 with unspecified inputs ignored",
                   lambda: selfloop_complete(load_fixture("vending/S1")).renamed("I1")),
    "vending/S1par2": ("plain composition of the vending specifications",
                       lambda: parallel_compose(load_fixture("vending/S1"), load_fixture("vending/S2")).renamed("S1par2")),
    "vending/I1par2": ("plain composition of the vending implementations",
                       lambda: parallel_compose(load_fixture("vending/I1"), load_fixture("vending/I2")).renamed("I1par2")),
}


def fixture_names() -> list:
    return sorted(set(_CATALOG) | set(_DERIVED))


def provenance(name: str) -> str:
    if name in _CATALOG:
        return _CATALOG[name].note
    if name in _DERIVED:
        return _DERIVED[name][0]
    raise UnknownFixtureError(name, fixture_names())


def load_fixture(name: str) -> Iolts:
    if name in _CATALOG:
        return parse_iolts(_CATALOG[name].text)
    if name in _DERIVED:
        return _DERIVED[name][1]()
    raise UnknownFixtureError(name, fixture_names())


def file_name(name: str) -> str:
    return name.replace("/", "-") + ".iolts"


def write_models(directory) -> list:
    """Write every fixture as ``<group>-<name>.iolts`` into ``directory``; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in fixture_names():
        path = directory / file_name(name)
        path.write_text(write_iolts(load_fixture(name)), encoding="utf-8")
        paths.append(path)
    return paths
