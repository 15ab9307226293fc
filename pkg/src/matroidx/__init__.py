"""Serial symmetric exchanges of matroid bases."""

__version__ = "0.1.0"

from .basecobase import (  # noqa: E402
    BaseCobaseGraph,
    CyclicOrder,
    build_graph,
    diameter,
    find_cyclic_order,
    is_connected,
    serial_to_cyclic,
)
from .exchange import (  # noqa: E402
    BasePair,
    ConnSet,
    ExchangeSequence,
    brute_force_serial_exchange,
    conn_set,
    find_symmetric_partner,
    find_two_disjoint_exchanges,
    full_serial_exchange,
    full_serial_exchange_rank3,
    full_serial_exchange_rank4,
    is_symmetric_exchange,
    lemma3_property,
    lemma4_property,
    pair_serial_exchange,
    serial_support_identity_check,
    verify_sequence,
)
from .io import format_matroid, load_matroid, parse_matroid  # noqa: E402
from .matroid import (  # noqa: E402
    GraphicMatroid,
    LinearGF2Matroid,
    LinearRationalMatroid,
    Matroid,
    UniformMatroid,
    fundamental_circuit,
    is_base,
    is_independent,
    rank_of,
    restrict,
)
