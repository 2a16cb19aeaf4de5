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


"""Projection identities and the restricted sums they lead to.

Each projection P_{t,r} keeps the coefficients at exponents congruent to
r modulo t. The restricted sums over the ternary forms (1,1,1), (1,1,2)
and (1,1,3) are compared with the theta products that appear after the
projection.
"""

from ..lattice import restricted_preset
from ..series import project, shift
from ..theta import ThetaKind, borwein_c, char_square_series, euler_E, phi, psi, series_sum
from ..verification import identity
from ._common import euler_E_neg



def _phi_neg(k, N):
	return series_sum(ThetaKind.PHI_NEG, k, N)



def _psi_neg(k, N):
	return series_sum(ThetaKind.PSI_NEG, k, N)



@identity('k0', reference='phi(-q)^2 = phi(q^2)^2 - 4q psi(q^4)^2')
def _k0(N):
	return _phi_neg(1, N)**2, phi(2, N)**2 - 4*shift(psi(4, N)**2, 1)



@identity('k1', reference='phi(q^8)^2 - phi(-q^8)^2 = 8q^8 psi(q^32)^2')
def _k1(N):
	return phi(8, N)**2 - _phi_neg(8, N)**2, 8*shift(psi(32, N)**2, 8)



@identity('k2', default_N=2000, reference='phi(q^8)^2 - 8q^8 psi(q^32)^2 = phi(-q^8)^2')
def _k2(N):
	return phi(8, N)**2 - 8*shift(psi(32, N)**2, 8), _phi_neg(8, N)**2



@identity('k3', reference='q phi(q^8)^2 psi(q^8) - q E(q^8)^3 = 8q^9 psi(q^32)^2 psi(q^8)')
def _k3(N):
	lhs = shift(phi(8, N)**2 * psi(8, N) - euler_E(8, N)**3, 1)
	return lhs, 8*shift(psi(32, N)**2 * psi(8, N), 9)



@identity('zzz', reference='P_{4,1} phi(q)^3 = 6q phi(q^4)^2 psi(q^8)')
def _zzz(N):
	return project(phi(1, N)**3, 4, 1), 6*shift(phi(4, N)**2 * psi(8, N), 1)



@identity('g', reference='P_{8,1} phi(q)^3 = 6q phi(q^8)^2 psi(q^8)')
def _g(N):
	return project(phi(1, N)**3, 8, 1), 6*shift(phi(8, N)**2 * psi(8, N), 1)



@identity('zzz1', reference='P_{8,5} phi(q)^3 = 24q^5 psi(q^16)^2 psi(q^8)')
def _zzz1(N):
	return project(phi(1, N)**3, 8, 5), 24*shift(psi(16, N)**2 * psi(8, N), 5)



@identity('t1', reference='P_{8,1} (phi(q)^3 - 6 sum (-4/n) n q^(n^2)) = 48q^9 psi(q^32)^2 psi(q^8)')
def _t1(N):
	lhs = project(phi(1, N)**3 - 6*char_square_series('D-4', N), 8, 1)
	return lhs, 48*shift(psi(32, N)**2 * psi(8, N), 9)



@identity('c0', reference='phi(-q) = phi(q^4) - 2q psi(q^8)')
def _c0(N):
	return _phi_neg(1, N), phi(4, N) - 2*shift(psi(8, N), 1)



@identity('c1', reference='phi(-q^2) = phi(q^2) - 4q^2 psi(q^16)')
def _c1(N):
	return _phi_neg(2, N), phi(2, N) - 4*shift(psi(16, N), 2)



@identity('c3', reference='phi(q)^2 psi(-q) = phi(q^2) phi(q) psi(q) - 4q^2 psi(q^16) phi(q) psi(q)')
def _c3(N):
	phi_psi = phi(1, N) * psi(1, N)
	return phi(1, N)**2 * _psi_neg(1, N), phi(2, N) * phi_psi - 4*shift(psi(16, N) * phi_psi, 2)



def _b20_part(N):
	return shift(phi(8, N) * psi(8, N) * psi(128, N), 17)



@identity('c4', reference='q phi(q^8)^2 psi(-q^8) = q phi(q^16) psi(q^8) phi(q^8) - 4q^17 phi(q^8) psi(q^8) psi(q^128)')
def _c4(N):
	lhs = shift(phi(8, N)**2 * _psi_neg(8, N), 1)
	return lhs, shift(phi(16, N) * psi(8, N) * phi(8, N), 1) - 4*_b20_part(N)



@identity('c5', reference='q phi(q^8)^2 psi(-q^8) = q E(-q^8)^3')
def _c5(N):
	return shift(phi(8, N)**2 * _psi_neg(8, N), 1), shift(euler_E_neg(8, N)**3, 1)



@identity('id112', reference='q psi(q^8) phi(q^8) phi(q^16) - q E(-q^8)^3 = 4q^17 phi(q^8) psi(q^8) psi(q^128)')
def _id112(N):
	lhs = shift(psi(8, N) * phi(8, N) * phi(16, N) - euler_E_neg(8, N)**3, 1)
	return lhs, 4*_b20_part(N)



@identity('gg', reference='P_{8,1} phi(q)^2 phi(q^2) = 4q psi(q^8) phi(q^8) phi(q^16)')
def _gg(N):
	return project(phi(1, N)**2 * phi(2, N), 8, 1), 4*shift(psi(8, N) * phi(8, N) * phi(16, N), 1)



@identity('t2', reference='P_{8,1} (phi(q)^2 phi(q^2) - 4 sum (-2/n) n q^(n^2)) = 16q^17 phi(q^8) psi(q^8) psi(q^128)')
def _t2(N):
	lhs = project(phi(1, N)**2 * phi(2, N) - 4*char_square_series('D-2', N), 8, 1)
	return lhs, 16*_b20_part(N)



def _b30_part(N):
	return shift(psi(72, N) * borwein_c(48, N), 25)



@identity('jpeg1', default_N=2000, reference='P_{24,1} (phi(q)^2 phi(q^3) - 4 sum (-12/n) n q^(n^2)) = 16q^25 psi(q^72) c(q^48)')
def _jpeg1(N):
	lhs = project(phi(1, N)**2 * phi(3, N) - 4*char_square_series('D-12', N), 24, 1)
	return lhs, 16*_b30_part(N)



@identity('b10-restricted', default_N=2000, reference='sum over (1,1,1) with x = 1 mod 4 and y, z = 2 mod 8 equals q^9 psi(q^8) psi(q^32)^2')
def _b10_restricted(N):
	return restricted_preset('B10', N), shift(psi(8, N) * psi(32, N)**2, 9)



@identity('b20-restricted', default_N=2000, reference='sum over (1,1,2) with x = 1 mod 4, y = 4 mod 16 and z even equals q^17 phi(q^8) psi(q^8) psi(q^128)')
def _b20_restricted(N):
	return restricted_preset('B20', N), _b20_part(N)



@identity('b30-restricted', default_N=4000, reference='3 times the sum of q^(x^2 + 4y^2 + 12z^2) with x = 3 mod 12, y = z mod 6 and y + z = 2 mod 6 equals q^25 psi(q^72) c(q^48)')
def _b30_restricted(N):
	return 3*restricted_preset('B30', N), _b30_part(N)



@identity('g0-restricted', reference='sum over (1,1,1) with x, y, z odd equals 8q^3 psi(q^8)^3')
def _g0_restricted(N):
	return restricted_preset('G0', N), 8*shift(psi(8, N)**3, 3)
