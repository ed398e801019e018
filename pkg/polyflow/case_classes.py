# -*- coding: utf-8 -*-
"""Immutable value objects with structural equality.

A case class declares its ``_fields``; construction binds positional and
keyword arguments to them, lists are frozen into tuples, and ``_check`` is
run so that only well-formed values exist.
"""


class CaseClass(object):

    _fields = ()
    _defaults = {}

    def __init__(self, *args, **kwargs):
        cls = self.__class__
        if len(args) > len(cls._fields):
            raise TypeError("%s takes at most %d arguments (%d given)" %
                            (cls.__name__, len(cls._fields), len(args)))
        values = dict(zip(cls._fields, args))
        for name, value in kwargs.items():
            if name not in cls._fields:
                raise TypeError("%s got an unexpected field %r" %
                                (cls.__name__, name))
            if name in values:
                raise TypeError("%s got multiple values for field %r" %
                                (cls.__name__, name))
            values[name] = value
        for name in cls._fields:
            if name not in values:
                if name not in cls._defaults:
                    raise TypeError("%s missing field %r" %
                                    (cls.__name__, name))
                values[name] = cls._defaults[name]
            object.__setattr__(self, name, _freeze(values[name]))
        self._check()

    def _check(self):
        pass

    def __setattr__(self, name, value):
        if name in self.__class__._fields:
            raise AttributeError("%s.%s is read-only" %
                                 (self.__class__.__name__, name))
        object.__setattr__(self, name, value)

    def copy(self, **kwargs):
        old = list(map(lambda a: (a, getattr(self, a)), self._fields))
        new = list(kwargs.items())
        return self.__class__(**dict(old + new))

    def __str__(self):
        return (self.__class__.__name__ + "(" +
                ", ".join(repr(getattr(self, x))
                          for x in self.__class__._fields) + ")")

    def __repr__(self):
        return self.__str__()

    def __eq__(self, other):
        try:
            return self.__class__ == other.__class__ \
                and all(getattr(self, x) == getattr(other, x)
                        for x in self.__class__._fields)
        except AttributeError:
            return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.__class__.__name__,) + tuple(self))

    def __iter__(self):
        for x in self.__class__._fields:
            yield getattr(self, x)


def _freeze(value):
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value
