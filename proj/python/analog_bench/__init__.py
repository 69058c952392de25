"""Quantum barrier / electromagnetic slab analogue bench."""

from ._core import (
    AnalogError,
    ScatterResult,
    SParams,
    SweepTable,
    WireArraySpec,
    __version__,
    brown_impedance,
    brown_index,
    brown_response,
    constants,
    effective_barrier,
    em_to_qm,
    equivalence_check,
    nrw_extract,
    parse_touchstone,
    read_csv,
    rt_delta,
    rt_rect,
    run_cli,
    solve_lattice_a,
    solve_sparams,
    sweep_frequency,
    sweep_width,
    sweep_wire_radius,
    table1,
    transfer_matrix_rect,
    write_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
