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


r"""thetaforms computes theta series of ternary quadratic forms exactly.

The package provides truncated q-series with exact 64 bit integer
coefficients, the classical theta functions and Euler products, lattice
enumeration for positive definite ternary and binary forms, the divisor
formulas for the representations of squares, a classifier for the integers
a form does not represent, and a registry of identities between all of
these that is checked coefficient by coefficient.
"""

from . import verification
from ._exceptions import (ClaimViolationError, CoefficientOverflowError, ConfigError, InputError,
						  NotPositiveDefiniteError, ThetaFormsException)
from .classifier import excluded, scan_excluded
from .divisors import equality_class, factorize, hurwitz_rep_of_square, inequality_report, kronecker
from .lattice import BinaryForm, CongruenceSystem, TernaryForm, binary_theta, restricted_theta, theta_series
from .series import QSeries
from .theta import ThetaKind, classical, euler_E, phi, psi, theta_f
from .utils import create_config



__all__ = ['QSeries', 'ThetaKind', 'classical', 'euler_E', 'phi', 'psi', 'theta_f',
		   'TernaryForm', 'BinaryForm', 'CongruenceSystem', 'theta_series', 'restricted_theta', 'binary_theta',
		   'kronecker', 'factorize', 'hurwitz_rep_of_square', 'equality_class', 'inequality_report',
		   'excluded', 'scan_excluded', 'create_config', 'verification',
		   'ThetaFormsException', 'InputError', 'NotPositiveDefiniteError', 'ConfigError',
		   'CoefficientOverflowError', 'ClaimViolationError']
