# Copyright (C) 2021 The thetaforms developers
#
# This file is part of thetaforms.
#
# thetaforms is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# thetaforms is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with thetaforms.  If not, see <https://www.gnu.org/licenses/>.


"""Catalog of the registered identities.

Importing this package registers every identity with
:py:mod:`thetaforms.verification`. The cases are grouped into the product
and theta function identities in one variable, the projection identities
behind the restricted sums, and the identities between lattice sums of
binary and ternary forms and theta products.
"""

from . import _lattice_sums, _projections, _q_series  # noqa: F401
