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

"""Small builders shared by the identity groups."""

from ..series import alternate, dilate
from ..theta import _base_order, euler_E



def euler_E_neg(k, N):
	"""Computes E(-q^k) truncated at q^N."""

	return dilate(alternate(euler_E(1, _base_order(N, k))), k, N)
