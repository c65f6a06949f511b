from ._ldiqec import (
    BudgetExceededError,
    LdiCode,
    LdiError,
    NotLdiError,
    ParseError,
    StabilizerCode,
    css_distance,
    distance,
    gqhb,
    hamming_css,
    hamming_ldi,
    ldi_css_lift,
    ldi_prescriptive,
    ldi_sign_search,
    load_code,
    p_star,
    p_star_css_squared,
    phi_map,
    symplectic_product,
    verify_ldi,
)

__all__ = [name for name in dir() if not name.startswith("_")]
