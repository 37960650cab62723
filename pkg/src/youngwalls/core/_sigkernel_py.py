"""Pure-Python signature reduction, used when the compiled kernel is unavailable."""


def reduce_counts(eps, phi):
    """Reduce the word -^eps[0] +^phi[0] -^eps[1] +^phi[1] ... by cancelling +- pairs.

    Returns ``(minus, plus, first_plus, last_minus)``: the surviving counts,
    the factor position holding the leftmost surviving +, and the position
    holding the rightmost surviving - (``-1`` when absent).
    """
    stack_pos = []
    stack_cnt = []
    plus = 0
    minus = 0
    last_minus = -1
    for j in range(len(eps)):
        e = eps[j]
        if e:
            c = e if e < plus else plus
            plus -= c
            rem = c
            while rem:
                top = stack_cnt[-1]
                if top <= rem:
                    rem -= top
                    stack_cnt.pop()
                    stack_pos.pop()
                else:
                    stack_cnt[-1] = top - rem
                    rem = 0
            if e > c:
                minus += e - c
                last_minus = j
        p = phi[j]
        if p:
            stack_pos.append(j)
            stack_cnt.append(p)
            plus += p
    return minus, plus, (stack_pos[0] if stack_pos else -1), last_minus
