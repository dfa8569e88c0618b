#   ephoton -- Photon-electron entanglement in a highly excited radiation mode
#   Copyright (C) 2019  The ephoton developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Writers for the datasets emitted by the command line interface. Floats are
written with their shortest round-trip representation so that identical
inputs produce byte-identical files.
"""

import collections
import csv
import datetime
import hashlib
import json
import os

import numpy as np

FORMATS = ("csv", "json")


def _plain(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return collections.OrderedDict((k, _plain(v)) for k, v in value.items())
    return value


def _cell(value):
    value = _plain(value)
    if isinstance(value, float):
        return repr(value)
    return value


def write_table(path, columns, rows, fmt="csv"):
    """
    Writes a table with the given column names. Units belong into the column
    names, e.g. "x[w]". Returns the path of the written file, with the
    extension matching the format.
    """
    if fmt not in FORMATS:
        raise ValueError("Unknown output format {!r}".format(fmt))
    path = os.path.splitext(path)[0] + "." + fmt
    rows = [list(row) for row in rows]
    for row in rows:
        if len(row) != len(columns):
            raise ValueError("Row {} does not match columns {}".format(
                row, columns))

    if fmt == "csv":
        with open(path, "w", newline="", encoding="utf-8") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(columns)
            for row in rows:
                w.writerow([_cell(v) for v in row])
    else:
        write_json(path, collections.OrderedDict((
            ("columns", list(columns)),
            ("rows", [_plain(row) for row in rows]),
        )))
    return path


def write_json(path, data):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(_plain(data), f, indent=2)
        f.write("\n")
    return path


def sha256_of_file(path):
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def utc_timestamp():
    dt = datetime.datetime.now(datetime.timezone.utc).replace(microsecond=0)
    return dt.isoformat().replace("+00:00", "Z")


class RunManifest:
    """
    Record of a single command line invocation. `write` is safe to call from
    a `finally` block; files that were registered are listed even if the
    command failed afterwards.
    """

    FILENAME = "manifest.json"

    def __init__(self, command, tool_version, config=None, derived=None):
        self.command = command
        self.tool_version = tool_version
        self.config = config
        self.derived = derived
        self.outputs = []
        self.status = "running"
        self.messages = []
        self.timestamp = utc_timestamp()

    def add_output(self, path):
        self.outputs.append(path)
        return path

    def to_dict(self):
        outputs = []
        for path in self.outputs:
            outputs.append(collections.OrderedDict((
                ("file", os.path.basename(path)),
                ("sha256", sha256_of_file(path) if os.path.isfile(path) else None),
            )))
        return collections.OrderedDict((
            ("command", self.command),
            ("tool_version", self.tool_version),
            ("timestamp", self.timestamp),
            ("status", self.status),
            ("config", self.config),
            ("derived", self.derived),
            ("outputs", outputs),
            ("messages", list(self.messages)),
        ))

    def write(self, out_dir):
        os.makedirs(out_dir, exist_ok=True)
        return write_json(os.path.join(out_dir, self.FILENAME), self.to_dict())
