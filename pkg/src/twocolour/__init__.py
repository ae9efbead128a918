"""2-colour parity, 2-colour writhe and related invariants of virtual links."""

from .colouring import (
    NotTwoColourable,
    TwoColouring,
    colourings,
    degenerate_components,
    dualize,
    generating_set,
    incoming_colour,
)
from .diagram import (
    CrossingChange,
    GaussDiagram,
    GaussSyntaxError,
    LabelError,
    Mirror,
    ParseError,
    ReverseComponent,
    SimpleGaussDiagram,
    forget,
    parse,
    rotate_basepoint,
    serialize,
    transform,
)
from .invariants import (
    WritheProfile,
    linking_matrix,
    naive_writhe,
    report,
    self_writhe,
    smoothing_height,
    two_colour_writhe,
    two_colour_writhe_enum,
    two_colour_writhe_fast,
    writhe,
)
from .parity import (
    ParityAssignment,
    free_two_colour_parity,
    gaussian_parity,
    ip_self_parity,
    naive_parity,
    project,
    two_colour_parity,
)

__version__ = "0.1.0"
