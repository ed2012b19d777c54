"""Northeast lattice path representations and exact conversions.

A path built from unit steps E = (1, 0) and N = (0, 1) has three equivalent
encodings:

* word: the step letters in order, e.g. ``"EENEN"``;
* heights: ``p[i]`` is the y-value of the path over [i, i+1], a nondecreasing
  tuple with one entry per E step;
* differences: ``v[i]`` counts the N steps taken at x = i.

The height form drops any N steps after the last E, so converting heights
back to a word needs the terminal height as an extra argument.

Textual forms (shared with the CLI): ``w:EENEN``, ``h:0,0,1,3``, ``d:1,0,2``.
The empty path renders as ``w:`` / ``h:`` / ``d:``.
"""

from __future__ import annotations

from itertools import accumulate

Heights = tuple[int, ...]
Diffs = tuple[int, ...]
Point = tuple[int, ...]
Word = str


def validate_heights(p) -> Heights:
    """Return ``p`` as a tuple, rejecting negative or decreasing entries."""
    p = tuple(p)
    prev = 0
    for h in p:
        if h < 0:
            raise ValueError(f"height {h!r} is negative")
        if h < prev:
            raise ValueError(f"heights must be nondecreasing (found {prev} followed by {h})")
        prev = h
    return p


def validate_diffs(v) -> Diffs:
    """Return ``v`` as a tuple, rejecting negative entries."""
    v = tuple(v)
    for d in v:
        if d < 0:
            raise ValueError(f"difference {d!r} is negative")
    return v


def delta(p: Heights) -> Diffs:
    """Difference sequence (p_1, p_2 - p_1, ..., p_n - p_{n-1})."""
    out = []
    prev = 0
    for h in p:
        out.append(h - prev)
        prev = h
    return tuple(out)


def sigma(v: Diffs) -> Heights:
    """Partial sums; the inverse of :func:`delta`."""
    return tuple(accumulate(v))


def word_to_heights(w: Word) -> Heights:
    """Height tuple of a step word: N steps seen before each E.

    N steps after the last E do not appear in the result; recover them with
    :func:`heights_to_word` and the word's total N count.
    """
    heights = []
    seen_n = 0
    for ch in w:
        if ch == "E":
            heights.append(seen_n)
        elif ch == "N":
            seen_n += 1
        else:
            raise ValueError(f"invalid step {ch!r} (expected E or N)")
    return tuple(heights)


def heights_to_word(p: Heights, m: int) -> Word:
    """Step word for the height tuple ``p`` ending at height ``m``."""
    p = validate_heights(p)
    top = p[-1] if p else 0
    if m < top:
        raise ValueError(f"terminal height {m} is below the last height {top}")
    parts = []
    prev = 0
    for h in p:
        parts.append("N" * (h - prev))
        parts.append("E")
        prev = h
    parts.append("N" * (m - prev))
    return "".join(parts)


def is_restricted_by(q: Heights, p: Heights) -> bool:
    """True iff the path ``q`` stays weakly below ``p`` (componentwise q <= p)."""
    if len(q) != len(p):
        raise ValueError(f"cannot compare paths of lengths {len(q)} and {len(p)}")
    return all(a <= b for a, b in zip(q, p))


def in_polytope(x: Point, v: Diffs) -> bool:
    """True iff every prefix sum of ``x`` is bounded by the matching prefix sum of ``v``."""
    if len(x) != len(v):
        raise ValueError(f"cannot compare tuples of lengths {len(x)} and {len(v)}")
    sx = 0
    sv = 0
    for a, b in zip(x, v):
        sx += a
        sv += b
        if sx > sv:
            return False
    return True


def parse_path_spec(spec: str) -> Heights:
    """Parse a ``w:`` / ``h:`` / ``d:`` path spec into a height tuple."""
    if spec.startswith("w:"):
        body = spec[2:]
        for ch in body:
            if ch not in "EN":
                raise ValueError(f"invalid step {ch!r} in {spec!r} (expected E or N)")
        return word_to_heights(body)
    if spec.startswith(("h:", "d:")):
        body = spec[2:]
        values = []
        if body:
            for token in body.split(","):
                try:
                    value = int(token)
                except ValueError:
                    raise ValueError(f"invalid entry {token!r} in {spec!r}") from None
                if value < 0:
                    raise ValueError(f"negative entry {token!r} in {spec!r}")
                values.append(value)
        if spec.startswith("d:"):
            return sigma(tuple(values))
        return validate_heights(values)
    raise ValueError(f"path spec {spec!r} must start with w:, h:, or d:")


def format_heights(p: Heights) -> str:
    """Render a height tuple in the ``h:`` textual form."""
    return "h:" + ",".join(str(h) for h in p)
