"""Pure-Python versions of the hot loops; same API as the compiled ``_kernels``."""


def reflection_length(images):
    """Absolute (reflection) length of a signed permutation given in one-line form.

    This is ``n`` minus the number of cycle pairs ``{C, -C}`` with ``C != -C``.
    A plain permutation has no balanced cycles, so in type A this is ``n``
    minus the number of cycles.
    """
    n = len(images)
    seen = [False] * n
    free_pairs = 0
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        x = start
        balanced = False
        while True:
            seen[abs(x) - 1] = True
            y = images[abs(x) - 1]
            x = y if x > 0 else -y
            if x == start:
                break
            if x == -start:
                balanced = True
                break
        if not balanced:
            free_pairs += 1
    return n - free_pairs


def has_crossing(edges):
    """True iff two edges ``(a, c)``, ``(b, d)`` satisfy ``a < b < c < d``."""
    m = len(edges)
    for i in range(m):
        a, c = edges[i]
        for j in range(m):
            b, d = edges[j]
            if a < b < c < d:
                return True
    return False


def has_nesting(edges):
    """True iff two edges ``(a, d)``, ``(b, c)`` satisfy ``a < b < c < d``."""
    m = len(edges)
    for i in range(m):
        a, d = edges[i]
        for j in range(m):
            b, c = edges[j]
            if a < b < c < d:
                return True
    return False
