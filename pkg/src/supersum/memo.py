"""Thread-safe memo tables with optional on-disk persistence."""

from __future__ import annotations

import pickle
import threading
from functools import wraps

CACHE_FORMAT = b"SUPERSUM-CACHE\x00v1\n"

_REGISTRY: dict[str, "Memo"] = {}


class Memo:
    """A dict-backed cache: lock-free reads, insert-once writes under a lock."""

    def __init__(self, name: str):
        self.name = name
        self.table: dict = {}
        self._lock = threading.Lock()
        _REGISTRY[name] = self

    def get(self, key, default=None):
        return self.table.get(key, default)

    def put(self, key, value):
        with self._lock:
            return self.table.setdefault(key, value)

    def clear(self):
        with self._lock:
            self.table.clear()

    def __len__(self):
        return len(self.table)


def memoized(name: str):
    """Decorate a pure function of hashable arguments with a named :class:`Memo`."""

    def deco(fn):
        memo = Memo(name)
        missing = object()

        @wraps(fn)
        def wrapper(*args):
            hit = memo.table.get(args, missing)
            if hit is not missing:
                return hit
            return memo.put(args, fn(*args))

        wrapper.memo = memo
        return wrapper

    return deco


def save_caches(path) -> int:
    """Write every registered memo table to ``path``; returns the entry count."""
    data = {name: dict(m.table) for name, m in sorted(_REGISTRY.items())}
    with open(path, "wb") as fh:
        fh.write(CACHE_FORMAT)
        pickle.dump(data, fh, protocol=pickle.HIGHEST_PROTOCOL)
    return sum(len(t) for t in data.values())


def load_caches(path) -> int:
    """Load tables written by :func:`save_caches`; ignores files with another header."""
    with open(path, "rb") as fh:
        header = fh.read(len(CACHE_FORMAT))
        if header != CACHE_FORMAT:
            return 0
        data = pickle.load(fh)
    count = 0
    for name, table in data.items():
        memo = _REGISTRY.get(name)
        if memo is None:
            continue
        for k, v in table.items():
            memo.put(k, v)
            count += 1
    return count


def clear_caches():
    for m in _REGISTRY.values():
        m.clear()
