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

from ephoton.internal.env_guard import EnvGuard
from ephoton.internal.parallel import map_ordered

KEY = "_EPHOTON_TEST_"
KEY2 = "_EPHOTON_TEST_2_"


def environ(i):
    return dict(os.environ)


def env_of_worker(env):
    with EnvGuard(env):
        return map_ordered(environ, (0, 1), n_threads=2)[0]


def test_env_guard():
    os.environ.pop(KEY, None)

    # The guard is transparent without any variables
    with EnvGuard({}):
        assert KEY not in os.environ
    assert KEY not in os.environ

    # Variables are visible inside the guard only
    env = env_of_worker({KEY: "foo"})
    assert env[KEY] == "foo"
    assert env["OMP_NUM_THREADS"] == "1"
    assert KEY not in os.environ

    # Previous values are restored
    os.environ[KEY2] = "bar"
    try:
        env = env_of_worker({KEY: "foo", KEY2: "foo2"})
        assert env[KEY] == "foo"
        assert env[KEY2] == "foo2"
        assert KEY not in os.environ
        assert os.environ[KEY2] == "bar"
    finally:
        del os.environ[KEY2]


def test_env_guard_nested():
    os.environ.pop(KEY, None)
    guard = EnvGuard({KEY: 1})
    with guard:
        assert os.environ[KEY] == "1"
        with EnvGuard({KEY: "inner"}):
            assert os.environ[KEY] == "inner"
        assert os.environ[KEY] == "1"
        with guard:
            assert os.environ[KEY] == "1"
        assert os.environ[KEY] == "1"
    assert KEY not in os.environ


def test_env_guard_restores_on_error():
    os.environ.pop(KEY, None)
    try:
        with EnvGuard({KEY: "foo"}):
            raise RuntimeError()
    except RuntimeError:
        pass
    assert KEY not in os.environ
