"""Independent brute-force derivation of the expected values frozen in the
C++ tests. Shares no code with the library; run with python3."""
from itertools import permutations, product


def canon(s):
    m = {}
    return [m.setdefault(a, len(m) + 1) for a in s]


def issubseq(seq, sub):
    # Recursive definition, right to left.
    if not sub:
        return True
    if not seq:
        return False
    if seq[-1] == sub[-1]:
        return issubseq(seq[:-1], sub[:-1])
    return issubseq(seq[:-1], sub)


def contains(s, u):
    us = sorted(set(u))
    ss = sorted(set(s))
    for img in permutations(ss, len(us)):
        m = dict(zip(us, img))
        if issubseq(list(s), [m[a] for a in u]):
            return True
    return False


def alt_len(s):
    if not s:
        return 0
    best = 1
    for k in range(2, len(s) + 1):
        for x in set(s):
            for y in set(s):
                if x != y and issubseq(list(s), [x if i % 2 == 0 else y for i in range(k)]):
                    best = max(best, k)
    return best


def binary_formations(r, s):
    p = list(range(1, r + 1))
    for bits in product([0, 1], repeat=s - 1):
        f = list(p)
        for b in bits:
            f += p[::-1] if b else p
        yield f


def fw_naive(u):
    r = len(set(u))
    s = 1
    while True:
        if all(contains(f, u) for f in binary_formations(r, s)):
            return s
        s += 1


def all_formations(r, s):
    perms = list(permutations(range(1, r + 1)))
    for blocks in product(perms, repeat=s):
        yield [a for b in blocks for a in b]


def all_contain(r, s, u):
    return all(contains(f, u) for f in all_formations(r, s))


def fl(u, max_r=4):
    w = fw_naive(u)
    for r in range(len(set(u)), max_r + 1):
        if all_contain(r, w, u):
            return r
    return None


def canonical_words(length, max_letters):
    def rec(w, m):
        if len(w) == length:
            yield list(w)
            return
        for a in range(1, min(m + 1, max_letters) + 1):
            w.append(a)
            yield from rec(w, max(m, a))
            w.pop()
    yield from rec([], 0)


def doubled(n):
    return [w for w in canonical_words(2 * n, n) if all(w.count(a) == 2 for a in range(1, n + 1))]


def alt5(n):
    out = []
    for w in canonical_words(2 * n + 1, n):
        c = sorted(w.count(a) for a in range(1, n + 1))
        if c == [2] * (n - 1) + [3] and alt_len(w) >= 5:
            out.append(w)
    return out


def ex(u, n):
    r = len(set(u))
    best = 0
    stack = [[]]
    while stack:
        s = stack.pop()
        best = max(best, len(s))
        for c in range(1, n + 1):
            if c in s[max(0, len(s) - (r - 1)):] and r > 1:
                continue
            t = s + [c]
            if not contains(t, u):
                stack.append(t)
    return best


if __name__ == "__main__":
    print("canon(rev(123412342)) =", canon([1, 2, 3, 4, 1, 2, 3, 4, 2][::-1]))
    print("canon(rev(1233121)) =", canon([1, 2, 3, 3, 1, 2, 1][::-1]))
    print("canon(rev(123412341)) =", canon([1, 2, 3, 4, 1, 2, 3, 4, 1][::-1]))
    print("contains(31313, 12121) =", contains([3, 1, 3, 1, 3], [1, 2, 1, 2, 1]))
    print("alt(1233121) =", alt_len([1, 2, 3, 3, 1, 2, 1]))
    print("contains(1221, 121) =", contains([1, 2, 2, 1], [1, 2, 1]))
    for u in ([1, 1], [1, 2], [1, 2, 1], [1, 2, 1, 2, 1], [1, 2, 1, 2, 1, 2]):
        print("fw_naive", u, "=", fw_naive(u))
    print("all_contain(2,4,ababa) =", all_contain(2, 4, [1, 2, 1, 2, 1]))
    print("all_contain(3,4,ababa) =", all_contain(3, 4, [1, 2, 1, 2, 1]))
    print("fl(12) =", fl([1, 2]), "fl(121) =", fl([1, 2, 1]), "fl(12121) =", fl([1, 2, 1, 2, 1]))
    for n in (1, 2, 3, 4):
        print("doubled", n, len(doubled(n)))
    print("doubled 2 =", doubled(2))
    for n in (2, 3, 4):
        print("alt5", n, len(alt5(n)))
    print("alt5 2 =", alt5(2))
    for n in (1, 2, 3, 4):
        print("ex(ababa,%d) =" % n, ex([1, 2, 1, 2, 1], n))
    for n in (1, 2, 3):
        print("ex(aa,%d) =" % n, ex([1, 1], n))
