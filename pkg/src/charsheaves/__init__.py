"""Character sheaves for the symmetric pairs (SL_n, S(GL_p x GL_q)), as exact combinatorics."""

from .combinat import (
    Bipartition,
    CyclicCharacter,
    Partition,
    bipartitions_of,
    characters_of_order,
    euler_phi,
    partitions_of,
    transpose,
)
from .orbits import (
    PairContext,
    SignedYoungDiagram,
    component_character_set,
    d_lambda,
    enumerate_orbits,
    format_diagram,
    is_richardson,
    orbit_dimension,
    parse_diagram,
)
from .strata import DualStratumLabel, Pi1Data, cs_orbits, pi1_data, stratum_of_orbital_datum
from .classify import (
    EvenSheaf,
    LeviDatum,
    OddSheaf,
    OrbitalComplex,
    character_sheaves,
    cuspidal_sheaves,
    fourier_forward,
    fourier_inverse,
    induction_datum_for_sheaf,
    levi_for_nilpotent_support,
    nilpotent_support_sheaves,
    orbital_complexes,
)

__version__ = "0.1.0"
