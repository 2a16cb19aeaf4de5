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

"""Module including utility and helper functions.

This module includes the configuration handling of thetaforms together
with a few integer helpers that are shared by the series, lattice and
classification modules. They might also be interesting for users, so
they are part of the public API.
"""

import configparser
import numbers
from math import isqrt

from ._exceptions import ConfigError, InputError



def create_config(path):
	"""Generates a config object from a config file.

	Creates the config from a .ini file via the
	configparser package.

	Parameters
	----------
	path : str
		The path to the .ini file storing the configuration.

	Returns
	-------
	configparser.ConfigParser
		The output config file, which includes the path
		to the .ini file.

	Notes
	-----
	The recognised keys are ``trunc``, ``format`` and ``jobs`` in the
	section ``[Defaults]`` and ``verbose`` and ``timing`` in the section
	``[Output]``. All of them are optional, use :py:func:`load_defaults`
	to obtain a validated dictionary.
	"""

	config = configparser.ConfigParser()
	config.read(path)

	return config



def load_defaults(config=None):
	"""Reads and validates the run defaults from a config.

	Parameters
	----------
	config : configparser.ConfigParser or None, optional
		The config, e.g. created by :py:func:`create_config`. If this
		is ``None``, the built-in defaults are returned. Default is ``None``.

	Returns
	-------
	dict
		Dictionary with the keys ``trunc``, ``format``, ``jobs``,
		``verbose`` and ``timing``.

	Raises
	------
	ConfigError
		If one of the values cannot be parsed or is out of range.
	"""

	if config is None:
		config = configparser.ConfigParser()

	try:
		trunc = config.getint('Defaults', 'trunc', fallback=1000)
	except ValueError:
		raise ConfigError('Defaults', 'trunc', 'The truncation degree has to be an integer.')
	if trunc < 1:
		raise ConfigError('Defaults', 'trunc', 'The truncation degree has to be at least 1.')

	try:
		jobs = config.getint('Defaults', 'jobs', fallback=1)
	except ValueError:
		raise ConfigError('Defaults', 'jobs', 'The number of workers has to be an integer.')
	if jobs < 1:
		raise ConfigError('Defaults', 'jobs', 'The number of workers has to be at least 1.')

	try:
		fmt = _output_format_configuration(config.get('Defaults', 'format', fallback='text'))
	except InputError as error:
		raise ConfigError('Defaults', 'format', error.message)

	try:
		verbose = config.getboolean('Output', 'verbose', fallback=False)
	except ValueError:
		raise ConfigError('Output', 'verbose', 'Has to be a boolean.')

	try:
		timing = config.getboolean('Output', 'timing', fallback=True)
	except ValueError:
		raise ConfigError('Output', 'timing', 'Has to be a boolean.')

	return {'trunc' : trunc, 'format' : fmt, 'jobs' : jobs, 'verbose' : verbose, 'timing' : timing}



def _output_format_configuration(fmt):
	"""Returns the internal name of an output format.

	Parameters
	----------
	fmt : str
		User input for the output format.

	Returns
	-------
	str
		One of ``'text'``, ``'json'`` or ``'csv'``.
	"""

	if not type(fmt) == str:
		raise InputError('thetaforms.utils._output_format_configuration', 'fmt', 'Not a valid input type for the format. Has to be a string.')

	fmt = fmt.strip().lower()
	if fmt in ['text', 'txt', 'plain']:
		return 'text'
	elif fmt in ['json', 'js']:
		return 'json'
	elif fmt in ['csv']:
		return 'csv'
	else:
		raise InputError('thetaforms.utils._output_format_configuration', 'fmt', 'Not a valid choice for the output format.\n'
						 '	For human readable output use \'text\' or \'txt\'.\n'
						 '	For machine readable records use \'json\'.\n'
						 '	For spreadsheets use \'csv\'.')



def parse_int_tuple(text, lengths, obj='thetaforms.utils.parse_int_tuple'):
	"""Parses a comma separated literal of integers.

	Parameters
	----------
	text : str
		The literal, e.g. ``"9,17,32,-8,8,6"``. Spaces are ignored.
	lengths : tuple[int]
		The admissible numbers of entries.
	obj : str, optional
		Name of the calling object, used in the error message.

	Returns
	-------
	tuple[int]
		The parsed integers.

	Raises
	------
	InputError
		If the literal cannot be parsed or has a wrong number of entries.
	"""

	if not type(text) == str:
		raise InputError(obj, 'text', 'The literal has to be a string.')

	parts = [part.strip() for part in text.split(',')]
	try:
		values = tuple(int(part) for part in parts)
	except ValueError:
		raise InputError(obj, 'text', f'Could not parse "{text}" as a comma separated list of integers.')

	if len(values) not in lengths:
		raise InputError(obj, 'text', f'Expected {" or ".join(str(l) for l in lengths)} entries, got {len(values)}.')

	return values



def integer_interval(A, B, C):
	"""Computes the integers t with A t^2 + B t + C <= 0.

	The computation is exact: an integer square root gives a first guess
	which is then corrected by evaluating the polynomial.

	Parameters
	----------
	A : int
		Leading coefficient, has to be positive.
	B : int
		Linear coefficient.
	C : int
		Constant coefficient.

	Returns
	-------
	tuple[int, int] or None
		The smallest and largest admissible integer, or ``None`` if there
		is no such integer.
	"""

	if A <= 0:
		raise InputError('thetaforms.utils.integer_interval', 'A', 'The leading coefficient has to be positive.')

	D = B*B - 4*A*C
	if D < 0:
		return None

	s = isqrt(D)

	def p(t):
		return (A*t + B)*t + C

	lo = (-B - s) // (2*A) - 1
	hi = -((B - s) // (2*A)) + 1

	while lo <= hi and p(lo) > 0:
		lo += 1
	while hi >= lo and p(hi) > 0:
		hi -= 1

	if lo > hi:
		return None

	return lo, hi



def two_adic_split(n):
	"""Splits a positive integer into a power of two and an odd part.

	Parameters
	----------
	n : int
		A positive integer.

	Returns
	-------
	tuple[int, int]
		The exponent t and the odd part u with n = 2^t u.
	"""

	t = 0
	while n % 2 == 0:
		n //= 2
		t += 1

	return t, n



def _check_truncation(obj, N, minimum=0):
	if isinstance(N, bool) or not isinstance(N, numbers.Integral) or N < minimum:
		raise InputError(obj, 'N', f'The truncation degree has to be an integer >= {minimum}.')
