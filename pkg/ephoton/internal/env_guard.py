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

import os

class EnvGuard:
    """
    Temporarily sets environment variables, e.g. OMP_NUM_THREADS="1" while a
    pool of worker processes evaluates a grid. Guards can be nested and
    re-entered.
    """

    def __init__(self, env):
        self.env = env
        self.saved = []

    def __enter__(self):
        # Remember the previous value (or absence) of every variable we touch
        backup = {key: os.environ.get(key) for key in self.env}
        for key, value in self.env.items():
            os.environ[key] = str(value)
        self.saved.append(backup)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        for key, value in self.saved.pop().items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value
        return False
