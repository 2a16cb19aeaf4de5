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


"""Tests for the utils module.

"""

import os

import pytest

from thetaforms import create_config
from thetaforms._exceptions import ConfigError, InputError
from thetaforms.utils import _output_format_configuration, integer_interval, load_defaults, parse_int_tuple, two_adic_split



dir_path = os.path.dirname(os.path.realpath(__file__))



def test_create_config():
	config = create_config(dir_path + '/test_config.ini')

	assert config.getint('Defaults', 'trunc') == 64
	assert config.get('Defaults', 'format') == 'json'
	assert config.getboolean('Output', 'timing') == False

	defaults = load_defaults(config)
	assert defaults == {'trunc' : 64, 'format' : 'json', 'jobs' : 1, 'verbose' : False, 'timing' : False}



def test_default_settings():
	assert load_defaults() == {'trunc' : 1000, 'format' : 'text', 'jobs' : 1, 'verbose' : False, 'timing' : True}



def test_invalid_config():
	config = create_config(dir_path + '/test_config_invalid.ini')
	with pytest.raises(ConfigError):
		load_defaults(config)

	config.set('Defaults', 'trunc', '10')
	with pytest.raises(ConfigError):
		load_defaults(config)

	config.set('Defaults', 'format', 'csv')
	config.set('Defaults', 'jobs', '0')
	with pytest.raises(ConfigError):
		load_defaults(config)

	config.set('Defaults', 'jobs', '2')
	assert load_defaults(config)['format'] == 'csv'



def test_output_formats():
	assert _output_format_configuration('TXT') == 'text'
	assert _output_format_configuration(' js ') == 'json'
	assert _output_format_configuration('csv') == 'csv'

	with pytest.raises(InputError):
		_output_format_configuration('xml')
	with pytest.raises(InputError):
		_output_format_configuration(1)



def test_parse_int_tuple():
	assert parse_int_tuple('9,17,32,-8,8,6', (3, 6)) == (9, 17, 32, -8, 8, 6)
	assert parse_int_tuple(' 1, 1 ,3', (3, 6)) == (1, 1, 3)

	with pytest.raises(InputError):
		parse_int_tuple('1,1', (3, 6))
	with pytest.raises(InputError):
		parse_int_tuple('1,x,3', (3, 6))
	with pytest.raises(InputError):
		parse_int_tuple((1, 1, 3), (3, 6))



def test_integer_interval():
	assert integer_interval(1, 0, -10) == (-3, 3)
	assert integer_interval(1, 0, -9) == (-3, 3)
	assert integer_interval(2, -4, 2) == (1, 1)
	assert integer_interval(1, 0, 1) is None
	# the real roots 0.2 and 0.8 enclose no integer
	assert integer_interval(25, -25, 4) is None

	for A, B, C in [(3, 7, -40), (5, -11, -2), (1, 1, -1000), (7, 0, 0)]:
		lo, hi = integer_interval(A, B, C)
		inside = [t for t in range(-100, 101) if A*t*t + B*t + C <= 0]
		assert (lo, hi) == (inside[0], inside[-1])

	with pytest.raises(InputError):
		integer_interval(0, 1, 1)



def test_two_adic_split():
	assert two_adic_split(1) == (0, 1)
	assert two_adic_split(40) == (3, 5)
	assert two_adic_split(2**20) == (20, 1)
