"""ioco conformance checking with friendly composition and friendly hiding."""

from .algebra import (compose_with_map, demonic_complete, hide, pair_name, parallel_compose,
                      selfloop_complete)
from .conformance import (IOCO, UIOCO, Verdict, Witness, brute_force_check, failing_traces,
                          ioco_check, trace_violation, uioco_check)
from .diagnostics import explain, size_table, verdict_dict
from .errors import (AlphabetError, ComposabilityError, FormatError, IoltsError, ParameterError,
                     PreconditionError, StructuralError, UnknownFixtureError)
from .fixtures import fixture_names, load_fixture
from .formats import export_dot, parse_aut, parse_iolts, write_aut, write_iolts
from .friendly import (AmbiguousPair, EnvAutomaton, FriendlyOutcome, PruneReport, ambiguous_pairs,
                       e_reachable_fragment, envdet, friendly_compose, friendly_hide,
                       is_composition_friendly, is_friendly_environment, size_bound)
from .lts import DELTA, TAU, Alphabet, Iolts, is_composable, tau_closure, validate, weak_step
from .randgen import GenParams, random_composable_pair, random_iolts
from .suspension import (EXISTENTIAL, STRONG, UNIVERSAL, WEAK, DetView, after, determinize, is_utrace,
                         out_of, straces_upto, suspend, traces_equal_upto, traces_included_upto,
                         utraces_upto)

__version__ = "0.1.0"
