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

import multiprocessing
import os
import warnings

from .env_guard import EnvGuard

# Environment variable overriding the default number of worker processes
THREADS_ENV = "EPHOTON_THREADS"


def default_threads():
    value = os.environ.get(THREADS_ENV)
    if value is None:
        return 1
    n = int(value)
    return n if n > 0 else multiprocessing.cpu_count()


def _run_capturing(args):
    fn, task = args
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        result = fn(task)
    return result, [(w.category, str(w.message)) for w in caught]


def map_ordered(fn, tasks, n_threads=None):
    """
    Applies fn to every task and returns the results in task order. With more
    than one thread the tasks are distributed over a pool of spawned worker
    processes; warnings raised inside the workers are re-issued in the calling
    process, with their original category, once the corresponding result
    arrives. fn and the tasks must be picklable.
    """
    tasks = list(tasks)
    if n_threads is None:
        n_threads = default_threads()
    if n_threads <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]

    results = []
    with EnvGuard({"OMP_NUM_THREADS": "1"}):
        ctx = multiprocessing.get_context("spawn")
        with ctx.Pool(min(n_threads, len(tasks))) as pool:
            for result, caught in pool.imap(_run_capturing,
                                            ((fn, task) for task in tasks)):
                for category, msg in caught:
                    warnings.warn(msg, category=category)
                results.append(result)
    return results
