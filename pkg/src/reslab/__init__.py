"""reslab: exact q-series matrices, state integrals and Borel resummation
for the figure-eight and 5_2 knot complements."""

from .series import (QSeries, XLaurent, XFrac, INSIDE, OUTSIDE,
                     poch, poch_inf, ek_n, e2_series, series_div,
                     subst_q_exp, specialize_x, dumps_series, loads_series)

__version__ = "0.1.0"
