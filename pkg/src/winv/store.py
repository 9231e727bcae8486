"""Memo store keyed by canonical invariant keys, with text persistence."""

import os
import threading
from dataclasses import dataclass, field

from .exact import Fraction, from_text, to_text

ENGINE_VERSION = "1"
HEADER_PREFIX = "#winv-cache v1 "
CACHE_ENV = "WINV_CACHE"


class CorruptionError(RuntimeError):
    pass


class CacheFormatError(ValueError):
    pass


class MemoStore:
    """Thread-safe map from key text to exact value.

    Values are computed outside the lock, so two threads may race on the
    same key; the second insert must agree with the first.
    """

    def __init__(self, engine_version=ENGINE_VERSION):
        self.engine_version = engine_version
        self._data = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._data)

    def __contains__(self, key):
        return key in self._data

    def get(self, key, default=None):
        return self._data.get(key, default)

    def items(self):
        with self._lock:
            return sorted(self._data.items())

    def put(self, key, value):
        value = Fraction(value)
        with self._lock:
            old = self._data.get(key)
            if old is None:
                self._data[key] = value
                return value
        if old != value:
            raise CorruptionError(
                "conflicting values for %s: stored %s, new %s" % (key, to_text(old), to_text(value)))
        return old

    def get_or_compute(self, key, compute):
        value = self._data.get(key)
        if value is not None:
            return value
        return self.put(key, compute())

    def clear(self):
        with self._lock:
            self._data.clear()

    def save(self, path):
        with self._lock:
            rows = sorted(self._data.items())
        tmp = "%s.tmp" % path
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(HEADER_PREFIX + self.engine_version + "\n")
            for key, value in rows:
                fh.write("%s\t%s\n" % (key, to_text(value)))
        os.replace(tmp, path)
        return len(rows)

    def load(self, path, force=False):
        """Merge records from ``path``; returns the number of records read."""
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().split("\n")
        if not lines or not lines[0].startswith(HEADER_PREFIX):
            raise CacheFormatError("%s:1: missing cache header" % path)
        version = lines[0][len(HEADER_PREFIX):].strip()
        if version != self.engine_version and not force:
            raise CacheFormatError(
                "%s: engine version %r does not match %r" % (path, version, self.engine_version))
        if lines[-1] == "":
            lines.pop()
        count = 0
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0]:
                raise CacheFormatError("%s:%d: expected '<key>\\t<value>'" % (path, lineno))
            try:
                value = from_text(parts[1])
            except (ValueError, ZeroDivisionError):
                raise CacheFormatError("%s:%d: bad value %r" % (path, lineno, parts[1])) from None
            self.put(parts[0], value)
            count += 1
        return count


@dataclass(frozen=True)
class Options:
    """Switches that change how values are scheduled, never what they are.

    ``flip_odd_bases`` is the exception: it negates sixfold base values
    with k = 3 mod 4 and is used only to probe orientation dependence.
    """

    pivot: str = "largest"
    effectiveness: bool = True
    parity_shortcut: bool = True
    fiber_closed_forms: bool = True
    flip_odd_bases: bool = False


@dataclass
class Context:
    store: MemoStore = field(default_factory=MemoStore)
    options: Options = field(default_factory=Options)
    # raw-argument lookups in front of canonicalization; never saved
    scratch: dict = field(default_factory=dict, repr=False)

    def memo(self, key, compute):
        return self.store.get_or_compute(key, compute)


_default = Context()


def default_context():
    return _default


def resolve(ctx):
    return _default if ctx is None else ctx
