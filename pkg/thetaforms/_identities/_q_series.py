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


"""Product formulas and theta function identities in one variable.

"""

from ..series import alternate, bivariate_product_check, divide, project, shift
from ..theta import (ThetaKind, borwein_a, borwein_c, char_square_series, classical, euler_E,
					 eta_quotient, jacobi_triple_product, phi, psi, series_sum, theta_f)
from ..verification import identity, identity_check
from ._common import euler_E_neg



@identity('eneg', reference='E(-q) = E(q^2)^3 / (E(q^4) E(q))')
def _eneg(N):
	return alternate(euler_E(1, N)), eta_quotient({2 : 3}, {4 : 1, 1 : 1}, N)



@identity('pent', reference='f(-q,-q^2) = (q;q)')
def _pent(N):
	return theta_f(-1, 1, -1, 2, N), classical(ThetaKind.E, 1, N)



@identity('jac1', default_N=2500, reference='sum (-4/n) n q^(n^2) = q E(q^8)^3')
def _jac1(N):
	return char_square_series('D-4', N), shift(euler_E(8, N)**3, 1)



@identity('jac2', default_N=2500, reference='sum (-2/n) n q^(n^2) = q E(-q^8)^3')
def _jac2(N):
	return char_square_series('D-2', N), shift(euler_E_neg(8, N)**3, 1)



def _register_sum_product(name, kind, reference):
	@identity(name, reference=reference)
	def _sum_product(N):
		return series_sum(kind, 1, N), classical(kind, 1, N)



_register_sum_product('phi', ThetaKind.PHI, 'phi(q) = E(q^2)^5 / (E(q^4)^2 E(q)^2)')
_register_sum_product('phineg', ThetaKind.PHI_NEG, 'phi(-q) = E(q)^2 / E(q^2)')
_register_sum_product('psi', ThetaKind.PSI, 'psi(q) = E(q^2)^2 / E(q)')
_register_sum_product('psineg', ThetaKind.PSI_NEG, 'psi(-q) = E(q^4) E(q) / E(q^2)')
_register_sum_product('f12', ThetaKind.F12, 'f(q,q^2) = E(q^3)^2 E(q^2) / (E(q^6) E(q))')
_register_sum_product('f15', ThetaKind.F15, 'f(q,q^5) = E(q^12) E(q^3) E(q^2)^2 / (E(q^6) E(q^4) E(q))')



def _register_triple_product(name, arguments, reference):
	@identity(name, reference=reference)
	def _triple_product(N):
		return theta_f(*arguments, N), jacobi_triple_product(*arguments, N)



_register_triple_product('jtp-pent', (-1, 1, -1, 2), 'f(-q,-q^2) = (q;q^3)(q^2;q^3)(q^3;q^3)')
_register_triple_product('jtp-phi', (1, 1, 1, 1), 'f(q,q) = (-q;q^2)^2 (q^2;q^2)')
_register_triple_product('jtp-psi', (1, 1, 1, 3), 'f(q,q^3) = (-q;q^4)(-q^3;q^4)(q^4;q^4)')
_register_triple_product('jtp-f12', (1, 1, 1, 2), 'f(q,q^2) = (-q;q^3)(-q^2;q^3)(q^3;q^3)')
_register_triple_product('jtp-f15', (1, 1, 1, 5), 'f(q,q^5) = (-q;q^6)(-q^5;q^6)(q^6;q^6)')



@identity('lucky', reference='phi(-q^8)^2 psi(q^8) = E(q^8)^3')
def _lucky(N):
	return series_sum(ThetaKind.PHI_NEG, 8, N)**2 * psi(8, N), euler_E(8, N)**3



@identity('lucky2', reference='phi(-q^2) psi(q) = phi(q) psi(-q)')
def _lucky2(N):
	return series_sum(ThetaKind.PHI_NEG, 2, N) * psi(1, N), phi(1, N) * series_sum(ThetaKind.PSI_NEG, 1, N)



@identity_check('qpi', default_N=500, reference='quintuple product identity, compared for every power of z')
def _qpi(N):
	return bivariate_product_check(N).first_mismatch



@identity('scqpi', default_N=6000, reference='sum (-12/n) n q^(n^2) = q phi(q^12) E(q^12)^2')
def _scqpi(N):
	return char_square_series('D-12', N), shift(phi(12, N) * euler_E(12, N)**2, 1)



@identity('scqpi-eta', default_N=6000, reference='sum (-12/n) n q^(n^2) = q E(q^24)^5 / E(q^48)^2')
def _scqpi_eta(N):
	return char_square_series('D-12', N), shift(eta_quotient({24 : 5}, {48 : 2}, N), 1)



@identity('scqpi2', default_N=2000, reference='sum (-1)^(n+1) (-3/n) n q^(n^2) = q phi(q^3) E(q^12)^2')
def _scqpi2(N):
	return char_square_series('D-3ALT', N), shift(phi(3, N) * euler_E(12, N)**2, 1)



@identity('scqpi2-eta', default_N=2000, reference='sum (-1)^(n+1) (-3/n) n q^(n^2) = q E(q^6)^5 / E(q^3)^2')
def _scqpi2_eta(N):
	return char_square_series('D-3ALT', N), shift(eta_quotient({6 : 5}, {3 : 2}, N), 1)



@identity('phevod', reference='phi(q) = phi(q^4) + 2q psi(q^8)')
def _phevod(N):
	return phi(1, N), phi(4, N) + 2*shift(psi(8, N), 1)



@identity('mod31', reference='phi(q) = phi(q^9) + 2q f(q^3,q^15)')
def _mod31(N):
	return phi(1, N), phi(9, N) + 2*shift(theta_f(1, 3, 1, 15, N), 1)



@identity('mod33', reference='f(q,q^5) = f(q^8,q^16) + q f(q^4,q^20)')
def _mod33(N):
	return theta_f(1, 1, 1, 5, N), theta_f(1, 8, 1, 16, N) + shift(theta_f(1, 4, 1, 20, N), 1)



@identity('eq-1-17', reference='phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2')
def _eq_1_17(N):
	return phi(1, N)**2, phi(2, N)**2 + 4*shift(psi(4, N)**2, 1)



@identity('modeqn', reference='phi(q)^4 - phi(q^3)^4 = 8q f(q,q^5)^3 phi(q^3)')
def _modeqn(N):
	return phi(1, N)**4 - phi(3, N)**4, 8*shift(theta_f(1, 1, 1, 5, N)**3 * phi(3, N), 1)



@identity('evoddis', reference='phi(q) phi(q^3) = a(q^4) + 2q psi(q^2) psi(q^6)')
def _evoddis(N):
	return phi(1, N) * phi(3, N), borwein_a(4, N) + 2*shift(psi(2, N) * psi(6, N), 1)



@identity('aq1', reference='a(q) = a(q^4) + 6q psi(q^2) psi(q^6)')
def _aq1(N):
	return borwein_a(1, N), borwein_a(4, N) + 6*shift(psi(2, N) * psi(6, N), 1)



@identity('aq3', reference='psi(q) psi(q^3) = psi(q^4) phi(q^6) + q phi(q^2) psi(q^12)')
def _aq3(N):
	return psi(1, N) * psi(3, N), psi(4, N) * phi(6, N) + shift(phi(2, N) * psi(12, N), 1)



@identity('aq2', reference='4 phi(q^3) phi(q) a(q^2) - phi(q)^4 = 3 phi(q^3)^4')
def _aq2(N):
	return 4*phi(3, N) * phi(1, N) * borwein_a(2, N) - phi(1, N)**4, 3*phi(3, N)**4



@identity('cq2', reference='c(q) = 3 E(q^3)^3 / E(q)')
def _cq2(N):
	return borwein_c(1, N), classical(ThetaKind.C_FN, 1, N)



@identity('neq1', reference='P_{2,1} f(q^3,q^15) phi(q^3) = q^3 c(q^12)')
def _neq1(N):
	return project(theta_f(1, 3, 1, 15, N) * phi(3, N), 2, 1), shift(borwein_c(12, N), 3)



@identity('neq2', reference='P_{2,1} f(q,q^5) phi(q) = q c(q^4)')
def _neq2(N):
	return project(theta_f(1, 1, 1, 5, N) * phi(1, N), 2, 1), shift(borwein_c(4, N), 1)



@identity('aq4', reference='f(q,q^5) phi(q) = q c(q^4) + psi(q^2) f(q^2,q^4)')
def _aq4(N):
	return theta_f(1, 1, 1, 5, N) * phi(1, N), shift(borwein_c(4, N), 1) + psi(2, N) * theta_f(1, 2, 1, 4, N)



@identity('easy', reference='P_{3,1} phi(q)^2 phi(q^3) = 4q f(q^3,q^15) phi(q^3) phi(q^9)')
def _easy(N):
	lhs = project(phi(1, N)**2 * phi(3, N), 3, 1)
	return lhs, 4*shift(theta_f(1, 3, 1, 15, N) * phi(3, N) * phi(9, N), 1)



def _cube_class_24(N):
	return project(phi(1, N)**2 * phi(3, N), 24, 1)



def _c_part(N):
	return shift(psi(72, N) * borwein_c(48, N), 25)



@identity('hard', default_N=2000, reference='P_{24,1} phi(q)^2 phi(q^3) = 4q f(q^24,q^48) a(q^48) + 8q^25 psi(q^72) c(q^48)')
def _hard(N):
	return _cube_class_24(N), 4*shift(theta_f(1, 24, 1, 48, N) * borwein_a(48, N), 1) + 8*_c_part(N)



@identity('harder', default_N=2000, reference='P_{24,1} phi(q)^2 phi(q^3) = 4q E(q^24)^5 / E(q^48)^2 + 16q^25 psi(q^72) c(q^48)')
def _harder(N):
	return _cube_class_24(N), 4*shift(eta_quotient({24 : 5}, {48 : 2}, N), 1) + 16*_c_part(N)



def _step1_rhs(N):
	numerator = eta_quotient({1 : 5}, {2 : 2}, N) + 2*shift(psi(3, N) * borwein_c(2, N), 1)
	return divide(numerator, theta_f(1, 1, 1, 2, N))



@identity('step1', reference='a(q^2) = E(q)^5 / (f(q,q^2) E(q^2)^2) + 2q psi(q^3) c(q^2) / f(q,q^2)')
def _step1(N):
	return borwein_a(2, N), _step1_rhs(N)



def _step2_rhs(N):
	return 24*shift(theta_f(1, 1, 1, 5, N)**3 * phi(3, N), 1)



@identity('step2', reference='3 phi(q)^4 - (4 phi(q^3) phi(q) a(q^2) - phi(q)^4) = 24q f(q,q^5)^3 phi(q^3)')
def _step2(N):
	phi1 = phi(1, N)
	return 3*phi1**4 - (4*phi(3, N) * phi1 * borwein_a(2, N) - phi1**4), _step2_rhs(N)



@identity('step2-from-step1', reference='step1 at -q, multiplied by -4 phi(q) phi(q^3), plus 4 phi(q)^4')
def _step2_from_step1(N):
	phi1 = phi(1, N)
	return 4*phi1**4 - 4*phi1 * phi(3, N) * alternate(_step1_rhs(N)), _step2_rhs(N)
