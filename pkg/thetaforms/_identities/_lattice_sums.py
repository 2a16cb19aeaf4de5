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


"""Identities between lattice sums and theta products.

The binary sums over (72,12,1) and (72,60,13), the genus mates (1,3,36)
and (3,4,9), and the decompositions of the theta series of the forms
(9,16,36,16,4,8) and (9,17,32,-8,8,6) into theta products.
"""

import numpy as np

from ..lattice import JP1, JP2, BinaryForm, TernaryForm, binary_theta, restricted_preset, restricted_theta, theta_series
from ..series import shift
from ..theta import euler_E, phi, psi
from ..verification import Mismatch, identity, identity_check



# half width of the sample grid for the polynomial identities
GRID = 5



@identity('eq-4-1', reference='theta(72,12,1) - theta(72,60,13) = 2q E(q^12)^2')
def _eq_4_1(N):
	lhs = binary_theta(BinaryForm(72, 12, 1), N) - binary_theta(BinaryForm(72, 60, 13), N)
	return lhs, 2*shift(euler_E(12, N)**2, 1)



@identity('eq-4-2', reference='theta(72,12,1) = phi(q) phi(q^36)')
def _eq_4_2(N):
	return binary_theta(BinaryForm(72, 12, 1), N), phi(1, N) * phi(36, N)



@identity('eq-4-3', reference='theta(72,60,13) = phi(q^4) phi(q^9)')
def _eq_4_3(N):
	return binary_theta(BinaryForm(72, 60, 13), N), phi(4, N) * phi(9, N)



@identity('eq-4-4', default_N=2000, reference='theta(1,3,36) - theta(3,4,9) = 2q phi(q^3) E(q^12)^2')
def _eq_4_4(N):
	lhs = theta_series(TernaryForm(1, 3, 36), N) - theta_series(TernaryForm(3, 4, 9), N)
	return lhs, 2*shift(phi(3, N) * euler_E(12, N)**2, 1)



def _grid_check(form, decomposition):
	"""Compares a form with a sum of squares on the cube [-GRID, GRID]^3.

	The degree of a mismatch is the position of the point in the
	lexicographically ordered grid.
	"""

	axis = np.arange(-GRID, GRID + 1, dtype=np.int64)
	x, y, z = np.meshgrid(axis, axis, axis, indexing='ij')
	lhs = form(x, y, z).ravel()
	rhs = decomposition(x, y, z).ravel()

	differing = np.flatnonzero(lhs != rhs)
	if len(differing) == 0:
		return None

	index = int(differing[0])
	return Mismatch(index, int(lhs[index]), int(rhs[index]))



@identity_check('identity1-jp1', reference='9x^2+16y^2+36z^2+16yz+4xz+8xy = (x+4y+2z)^2 + 8x^2 + 32z^2 on a grid')
def _identity1_jp1(N):
	return _grid_check(JP1, lambda x, y, z: (x + 4*y + 2*z)**2 + 8*x**2 + 32*z**2)



@identity_check('identity1-jp2', reference='9x^2+17y^2+32z^2-8yz+8xz+6xy = (x+3y-4z)^2 + 4(x-y)^2 + 4(x+y+2z)^2 on a grid')
def _identity1_jp2(N):
	return _grid_check(JP2, lambda x, y, z: (x + 3*y - 4*z)**2 + 4*(x - y)**2 + 4*(x + y + 2*z)**2)



def _even_same(N):
	return phi(64, N)**3 + 2*shift(psi(128, N) * phi(64, N)**2, 16)



def _even_mixed(N):
	return 8*shift(psi(32, N) * psi(128, N)**2, 36)



def _odd(N):
	return 2*shift(psi(8, N) * psi(32, N)**2, 9)



@identity('identity2-jp1', default_N=2000,
		  reference='theta(9,16,36,16,4,8) = phi(q^64)^3 + 2q^16 psi(q^128) phi(q^64)^2 + 8q^36 psi(q^32) psi(q^128)^2 + 2q^9 psi(q^8) psi(q^32)^2')
def _identity2_jp1(N):
	return theta_series(JP1, N), _even_same(N) + _even_mixed(N) + _odd(N)



@identity('identity2-jp2', default_N=8192,
		  reference='theta(9,17,32,-8,8,6) = phi(q^32)^2 phi(q^256) + 2q^20 psi(q^32) psi(q^64)^2 + 8q^80 psi(q^128) psi(q^256)^2'
					' + 16q^144 psi(q^128) psi(q^512)^2 + 4q^36 psi(q^32) psi(q^128)^2 + 2q^9 psi(q^8) psi(q^32)^2')
def _identity2_jp2(N):
	rhs = phi(32, N)**2 * phi(256, N)
	rhs = rhs + 2*shift(psi(32, N) * psi(64, N)**2, 20)
	rhs = rhs + 8*shift(psi(128, N) * psi(256, N)**2, 80)
	rhs = rhs + 16*shift(psi(128, N) * psi(512, N)**2, 144)
	rhs = rhs + 4*shift(psi(32, N) * psi(128, N)**2, 36)
	rhs = rhs + _odd(N)
	return theta_series(JP2, N), rhs



def _rewritten_jp1(parity, N):
	"""Sum of q^(u^2 + 8x^2 + 32z^2) over u = x + 2z mod 4 and x of the given parity.

	With u = x + 4y + 2z these are the values of (9,16,36,16,4,8) written
	as a sum of squares.
	"""

	return restricted_theta(TernaryForm(1, 8, 32), None, [(1, -1, -2, 4, 0), (0, 1, 0, 2, parity)], N)



@identity('identity3-jp1',
		  reference='theta(9,16,36,16,4,8) = sum of q^((2x+4y+2z)^2 + 8(2x)^2 + 32z^2)'
					' + sum of q^((2x+1+4y+2z)^2 + 8(2x+1)^2 + 32z^2)')
def _identity3_jp1(N):
	return theta_series(JP1, N), _rewritten_jp1(0, N) + _rewritten_jp1(1, N)



@identity('identity4', default_N=8192, reference='sum over x even, x = 2z mod 4 equals phi(q^64)^3 + 2q^16 psi(q^128) phi(q^64)^2')
def _identity4(N):
	return restricted_preset('JP1_EVEN_SAME', N), _even_same(N)



@identity('identity5', default_N=8192, reference='sum over x even, x = 2z + 2 mod 4 equals 8q^36 psi(q^32) psi(q^128)^2')
def _identity5(N):
	return restricted_preset('JP1_EVEN_MIXED', N), _even_mixed(N)



@identity('identity6', default_N=8192,
		  reference='sum over x even equals phi(q^64)^3 + 2q^16 psi(q^128) phi(q^64)^2 + 8q^36 psi(q^32) psi(q^128)^2')
def _identity6(N):
	return restricted_preset('JP1_EVEN', N), _even_same(N) + _even_mixed(N)



@identity('identity7', default_N=2000, reference='sum over x odd equals 2q^9 psi(q^8) psi(q^32)^2')
def _identity7(N):
	return restricted_preset('JP1_ODD', N), _odd(N)
