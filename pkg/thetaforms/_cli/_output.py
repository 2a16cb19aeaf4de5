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


"""Rendering of command results as text, JSON or CSV.

Every command produces a list of flat or nested dictionaries. JSON output
is the list itself (keys in insertion order), CSV output flattens nested
dictionaries into ``parent_child`` columns.
"""

import csv
import io
import json



def _flatten(record, prefix=''):
	flat = {}
	for key, value in record.items():
		name = prefix + key
		if isinstance(value, dict):
			flat.update(_flatten(value, name + '_'))
		elif isinstance(value, (list, tuple)):
			flat[name] = ' '.join(str(v) for v in value)
		elif value is None:
			flat[name] = ''
		else:
			flat[name] = value
	return flat



def render_json(records):
	return json.dumps(records) + '\n'



def render_csv(records, columns=None):
	"""Renders records as CSV with a header row.

	Parameters
	----------
	records : list[dict]
		The records.
	columns : list[str] or None, optional
		The header. If this is ``None``, the union of the flattened keys in
		order of appearance is used. Default is ``None``.

	Returns
	-------
	str
		The CSV text.
	"""

	rows = [_flatten(record) for record in records]
	if columns is None:
		columns = []
		for row in rows:
			columns.extend(key for key in row if key not in columns)

	buffer = io.StringIO()
	writer = csv.DictWriter(buffer, fieldnames=columns, restval='', lineterminator='\n')
	writer.writeheader()
	writer.writerows(rows)

	return buffer.getvalue()



def render(records, fmt, text_lines, columns=None):
	"""Dispatches to the renderer of the requested format.

	Parameters
	----------
	records : list[dict]
		The structured result.
	fmt : str
		``'text'``, ``'json'`` or ``'csv'``.
	text_lines : list[str]
		The human readable rendering.
	columns : list[str] or None, optional
		Fixed CSV header. Default is ``None``.

	Returns
	-------
	str
		The rendered output.
	"""

	if fmt == 'json':
		return render_json(records)
	elif fmt == 'csv':
		return render_csv(records, columns)
	else:
		return ''.join(line + '\n' for line in text_lines)
