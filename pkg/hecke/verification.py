"""
Verification suites run by `manage.py verify`.

Each suite checks a family of identities at the configured sizes and returns
a list of CheckResult; nothing here raises on a failed identity, failures are
reported and logged.
"""
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial

import pandas as pd
from sympy import Matrix, Rational

from .canonbasis import (
    Partition, all_unit, all_unit_classical, build_basis, enumerate_sequences, hook_length_count,
    joint_rank, kernel_dimension_oracle, kernel_span_matches_images, partitions, rep_matrices,
    spans_full_algebra, two_row_count, two_row_split,
)
from .qarith import CLASSICAL, GENERIC, Q, Scalars, evaluate, format_elem
from .symgroup import HeckeElement, all_permutations, class_sums
from .tensorrep import (
    LinearOperator, casimir_classical, casimir_quantized, cartan_h, cartan_k, hecke_operator, identity, lowering,
    perm_action, raising, rbar, rotation_check,
)
from .tensorspace import (
    Ambient, TensorVector, inner_product, matrix_entries, operator_matrix, words_of_degree,
)

logger = logging.getLogger(__name__)

ROTATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ''

    def to_json(self):
        return asdict(self)

    def __str__(self):
        status = 'PASS' if self.passed else 'FAIL'
        return f'{status} {self.suite}: {self.name}' + (f' ({self.detail})' if self.detail else '')


def _result(suite, name, passed, detail=''):
    if not passed:
        logger.warning(f'{suite}: {name} failed {detail}'.rstrip())
    return CheckResult(suite, name, bool(passed), detail)


def _basis_vectors(ambient, words=None):
    return [TensorVector.basis_word(ambient, w) for w in (words if words is not None else ambient.words())]


def same_operator(a, b, vectors):
    return all(a(v) == b(v) for v in vectors)


def _commute(a, b, vectors):
    return same_operator(a @ b, b @ a, vectors)


def _point_scalars(config, symbolic_limit=4):
    """The configured scalars, or three seed points when n is too large for Q(q)."""
    if config.scalars.generic and config.n > symbolic_limit:
        return [Scalars(s) for s in config.seeds[:3]]
    return [config.scalars]


def _shapes(config):
    if config.partition is not None:
        return [config.partition]
    return partitions(config.n, config.d)


def suite_braid(config):
    ambient = Ambient(config.n, config.d, config.scalars)
    vectors = _basis_vectors(ambient)
    results = []
    for i in range(1, config.n - 1):
        lhs = rbar(ambient, i) @ rbar(ambient, i + 1) @ rbar(ambient, i)
        rhs = rbar(ambient, i + 1) @ rbar(ambient, i) @ rbar(ambient, i + 1)
        results.append(_result('braid', f'R{i}R{i + 1}R{i} = R{i + 1}R{i}R{i + 1}', same_operator(lhs, rhs, vectors)))
    for i in range(1, config.n):
        for j in range(i + 2, config.n):
            results.append(_result('braid', f'R{i}R{j} = R{j}R{i}', _commute(rbar(ambient, i), rbar(ambient, j), vectors)))
    for i in range(1, config.n):
        op = rbar(ambient, i)
        balanced = all(op(v).degrees() <= v.degrees() for v in vectors)
        results.append(_result('braid', f'R{i} preserves multidegree', balanced))
    return results


def action_table(scalars=GENERIC):
    """R̄ on the four words of V^2, d = 2, against the displayed table."""
    ambient = Ambient(2, 2, scalars)
    q = scalars.q
    x, y = 1, 2

    def word(*letters, coeff=None):
        return TensorVector.basis_word(ambient, letters, coeff)

    op = rbar(ambient, 1)
    return [
        ('Rxx = qxx', op(word(x, x)) == word(x, x, coeff=q)),
        ('Rxy = (q - 1/q)xy + yx', op(word(x, y)) == word(x, y, coeff=q - 1 / q) + word(y, x)),
        ('Ryx = xy', op(word(y, x)) == word(x, y)),
        ('Ryy = qyy', op(word(y, y)) == word(y, y, coeff=q)),
    ]


def suite_hecke(config):
    ambient = Ambient(config.n, config.d, config.scalars)
    vectors = _basis_vectors(ambient)
    q = config.scalars.q
    results = []
    for i in range(1, config.n):
        op = rbar(ambient, i)
        quadratic = (op.scaled(q - 1 / q) + identity(ambient))
        results.append(_result('hecke', f'R{i}^2 = (q - 1/q)R{i} + 1', same_operator(op @ op, quadratic, vectors)))
    for name, passed in action_table(config.scalars):
        results.append(_result('hecke', name, passed))
    for i in range(1, config.n):
        t = HeckeElement.generator(config.n, i)
        expected = t.scale(Q - 1 / Q) + HeckeElement.identity(config.n)
        results.append(_result('hecke', f'T{i}^2 = (q - 1/q)T{i} + 1 in H_{config.n}', t * t == expected))
    classical = Ambient(config.n, config.d, CLASSICAL)
    classical_vectors = _basis_vectors(classical)
    flips = all(
        same_operator(hecke_operator(classical, w), perm_action(classical, w), classical_vectors)
        for w in all_permutations(config.n)
    )
    results.append(_result('hecke', 'T_w at q = 1 permutes tensor positions', flips))
    return results


def suite_commutant(config):
    ambient = Ambient(config.n, config.d, config.scalars)
    vectors = _basis_vectors(ambient)
    q = config.scalars.q
    results = []
    for i in range(1, config.n):
        r = rbar(ambient, i)
        for j in range(1, config.d):
            for op in (raising(ambient, j), lowering(ambient, j), cartan_k(ambient, j)):
                results.append(_result('commutant', f'[R{i}, {op}] = 0', _commute(r, op, vectors)))
    for j in range(1, config.d):
        x, y, k, h = raising(ambient, j), lowering(ambient, j), cartan_k(ambient, j), cartan_h(ambient, j)
        results.append(_result(
            'commutant', f'(1/q - q)H{j} = 1 - K{j}^2',
            same_operator(h.scaled(1 / q - q), identity(ambient) - k @ k, vectors),
        ))
        results.append(_result(
            'commutant', f'qX{j}Y{j} - Y{j}X{j}/q = H{j}',
            same_operator((x @ y).scaled(q) - (y @ x).scaled(1 / q), h, vectors),
        ))
    return results


def suite_qcommute(config):
    d = max(config.d, 3)
    n = min(config.n, 3)
    ambient = Ambient(n, d, config.scalars)
    vectors = _basis_vectors(ambient)
    q = config.scalars.q
    results = []
    for i in range(1, d):
        for j in (i - 1, i + 1):
            if not 1 <= j <= d - 1:
                continue
            x, y = raising(ambient, i), lowering(ambient, j)
            results.append(_result('qcommute', f'X{i}Y{j} = qY{j}X{i}', same_operator(x @ y, (y @ x).scaled(q), vectors)))
    return results


def _power(op, v, m):
    for _ in range(m):
        v = op(v)
    return v


def suite_ladder(config):
    results = []
    for scalars in _point_scalars(config):
        ambient = Ambient(config.n, 2, scalars)
        x, y = raising(ambient, 1), lowering(ambient, 1)
        for i in range(config.n // 2 + 1):
            top = config.n - 2 * i
            for tableau, alpha in build_basis(Partition((config.n - i, i)), scalars):
                for m in range(1, top + 1):
                    coeff = scalars.q ** (-2 * m + 2) * scalars.qnum(top - m + 1) * scalars.qnum(m)
                    passed = x(_power(y, alpha, m)) == _power(y, alpha, m - 1).scale(coeff)
                    results.append(_result('lemma34', f'XY^{m} on {tableau} at q = {scalars}', passed))
                results.append(_result(
                    'lemma34', f'Y^{top + 1} kills {tableau} at q = {scalars}', not _power(y, alpha, top + 1),
                ))
    return results


def suite_orthogonality(config):
    results = []
    for scalars in _point_scalars(config):
        ambient = Ambient(config.n, config.d, scalars)
        for p in _shapes(config):
            basis = build_basis(p, scalars)
            killed = all(not raising(ambient, i)(v) for _, v in basis for i in range(1, config.d))
            results.append(_result('orthogonality', f'X_i kills V({p};0) at q = {scalars}', killed))
            pairs = [(s, t, inner_product(u, v)) for k, (s, u) in enumerate(basis) for t, v in basis[k + 1:]]
            bad = [f'{s}.{t} = {format_elem(c)}' for s, t, c in pairs if c]
            results.append(_result('orthogonality', f'V({p};0) at q = {scalars}', not bad, '; '.join(bad)))
    return results


def suite_norms(config):
    results = []
    for p in _shapes(config):
        if config.scalars.classical:
            results.append(_result('norms', f'norms of V({p};0) are units in Z[1/{config.n}!]', all_unit_classical(p, config.n)))
        else:
            results.append(_result('norms', f'norms of V({p};0) are units', all_unit(p, config.n)))
    return results


def _reconstructs(p, scalars):
    basis = [v for _, v in build_basis(p, scalars)]
    if not basis:
        return True
    ambient = basis[0].ambient
    for i, m in rep_matrices(p, scalars).items():
        entries = [[scalars.from_domain(c) for c in row] for row in m.to_list()]
        for col, v in enumerate(basis):
            expected = TensorVector(ambient)
            for row, u in enumerate(basis):
                expected = expected + u.scale(entries[row][col])
            if rbar(ambient, i)(v) != expected:
                return False
    return True


def suite_simplicity(config):
    q0 = config.seeds[0]
    shapes = _shapes(config)
    results = []
    sizes = {}
    for p in shapes:
        size = len(build_basis(p, Scalars(q0)))
        sizes[p] = size
        oracle = kernel_dimension_oracle(p, q0)
        hooks = hook_length_count(p.shape)
        results.append(_result(
            'simplicity', f'dim V({p};0) = kernel dimension = tableau count', size == oracle == hooks,
            f'{size}, {oracle}, {hooks}',
        ))
        results.append(_result('simplicity', f'T_w span End V({p};0) at q = {q0}', spans_full_algebra(p, q0)))
        results.append(_result('simplicity', f'R_i keeps V({p};0) at q = {q0}', _reconstructs(p, Scalars(q0))))
        if config.n <= 4:
            results.append(_result(
                'simplicity', f'V({p};0) is spanned by the images of the smaller bases', kernel_span_matches_images(p, q0),
            ))
    total = sum(f * f for f in sizes.values())
    if config.partition is None and config.d >= config.n:
        results.append(_result('simplicity', f'sum of f^2 = {config.n}!', total == factorial(config.n), str(total)))
    results.append(_result('simplicity', 'the simple modules are pairwise non-isomorphic', joint_rank(shapes, q0) == total))
    for i in range(config.n // 2 + 1):
        counted = len(enumerate_sequences(Partition((config.n - i, i))))
        results.append(_result('simplicity', f'<{config.n},{i}> counts the two-rowed tableaux', counted == two_row_count(config.n, i)))
        if i >= 1:
            expected = two_row_count(config.n - 1, i - 1) + (two_row_count(config.n - 1, i) if config.n > 2 * i else 0)
            results.append(_result('simplicity', f'<{config.n},{i}> recursion', counted == expected))
            prefixed, lifted = two_row_split(config.n, i, Scalars(q0))
            orthogonal = all(not inner_product(u, v) for u in prefixed for v in lifted)
            sized = len(prefixed) == (two_row_count(config.n - 1, i) if config.n > 2 * i else 0)
            results.append(_result('simplicity', f'V({config.n - i},{i};0) splits orthogonally', orthogonal and sized))
    return results


def _sympy_matrix(rows):
    return Matrix([[Rational(c.numerator, c.denominator) for c in row] for row in rows])


def casimir_classical_eigenvalues(n):
    """Eigenvalue -> multiplicity of the classical Casimir on V^n, d = 2."""
    ambient = Ambient(n, 2, CLASSICAL)
    op = casimir_classical(ambient)
    spectrum = {}
    for degree in ambient.degrees():
        block = _sympy_matrix(matrix_entries(operator_matrix(op, words_of_degree(degree))))
        for value, count in block.eigenvals().items():
            spectrum[value] = spectrum.get(value, 0) + count
    return spectrum


def expected_casimir_spectrum(n):
    """(r+1)^2 / 2 with multiplicity (r+1) <n, (n-r)/2> for r = n, n-2, ..."""
    return {
        Rational((n - 2 * k + 1) ** 2, 2): (n - 2 * k + 1) * two_row_count(n, k)
        for k in range(n // 2 + 1)
    }


def eigenspaces_orthogonal(n):
    ambient = Ambient(n, 2, CLASSICAL)
    op = casimir_classical(ambient)
    for degree in ambient.degrees():
        block = _sympy_matrix(matrix_entries(operator_matrix(op, words_of_degree(degree))))
        spaces = [vectors for _, _, vectors in block.eigenvects()]
        for k, first in enumerate(spaces):
            for second in spaces[k + 1:]:
                if any(u.dot(v) != 0 for u in first for v in second):
                    return False
    return True


def casimir_limit(n):
    """Every entry of the quantized Casimir at q = 1 is half the classical entry."""
    words = Ambient(n, 2).words()
    quantized = matrix_entries(operator_matrix(casimir_quantized(Ambient(n, 2, GENERIC)), words))
    classical = matrix_entries(operator_matrix(casimir_classical(Ambient(n, 2, CLASSICAL)), words))
    return all(
        evaluate(a, 1) == Fraction(b) / 2
        for row_a, row_b in zip(quantized, classical)
        for a, b in zip(row_a, row_b)
    )


def suite_casimir(config):
    n = config.n
    results = []
    spectrum = casimir_classical_eigenvalues(n)
    expected = expected_casimir_spectrum(n)
    results.append(_result(
        'casimir', f'classical Casimir spectrum on V^{n}', spectrum == expected,
        ', '.join(f'{value}: {count}' for value, count in sorted(spectrum.items(), reverse=True)),
    ))
    results.append(_result('casimir', 'classical eigenspaces are orthogonal', eigenspaces_orthogonal(n)))
    scalars = config.scalars if not config.scalars.classical else GENERIC
    ambient = Ambient(n, 2, scalars)
    vectors = _basis_vectors(ambient)
    c = casimir_quantized(ambient)
    for op in [rbar(ambient, i) for i in range(1, n)] + [raising(ambient, 1), lowering(ambient, 1), cartan_k(ambient, 1)]:
        results.append(_result('casimir', f'[Cq, {op}] = 0', _commute(c, op, vectors)))
    m = operator_matrix(c, ambient.words())
    results.append(_result('casimir', f'Cq is self-adjoint on V^{n}', m == m.transpose()))
    results.append(_result('casimir', 'Cq at q = 1 is half the classical Casimir', casimir_limit(n)))
    return results


def suite_rotation(config):
    d = max(config.d, 2)
    results = []
    for t in config.t_values:
        residual = rotation_check(t, d)
        results.append(_result(
            'rotation', f'cos(t)R + sin(t) = exp(-t gamma) P exp(t gamma) at t = {t}, d = {d}',
            residual <= ROTATION_TOLERANCE, f'residual {residual:.3e}',
        ))
    return results


def _symmetric(op, words):
    m = operator_matrix(op, words)
    return m == m.transpose()


def suite_selfadjoint(config):
    results = []
    ambient = Ambient(config.n, config.d, config.scalars)
    for degree in ambient.degrees():
        words = words_of_degree(degree)
        for i in range(1, config.n):
            results.append(_result('selfadjoint', f'R{i} is symmetric on multidegree {degree}', _symmetric(rbar(ambient, i), words)))
    classical = Ambient(config.n, config.d, CLASSICAL)
    for shape, element in sorted(class_sums(config.n).items()):
        def apply(v, element=element):
            total = TensorVector(classical)
            for w, c in element.terms.items():
                total = total + perm_action(classical, w)(v).scale(c)
            return total
        op = LinearOperator(classical, f'class{shape}', apply)
        symmetric = all(_symmetric(op, words_of_degree(degree)) for degree in classical.degrees())
        results.append(_result('selfadjoint', f'class sum {shape} is symmetric', symmetric))
    if config.n <= 4:
        quantized = Ambient(config.n, 2, GENERIC)
        results.append(_result('selfadjoint', 'Cq is symmetric', _symmetric(casimir_quantized(quantized), quantized.words())))
    return results


SUITES = {
    'braid': suite_braid,
    'hecke': suite_hecke,
    'commutant': suite_commutant,
    'qcommute': suite_qcommute,
    'lemma34': suite_ladder,
    'orthogonality': suite_orthogonality,
    'norms': suite_norms,
    'simplicity': suite_simplicity,
    'casimir': suite_casimir,
    'rotation': suite_rotation,
    'selfadjoint': suite_selfadjoint,
}


def run_suite(name, config):
    results = SUITES[name](config)
    passed = sum(r.passed for r in results)
    logger.info(f'suite {name}: {passed}/{len(results)} checks passed')
    return results


def results_frame(results):
    return pd.DataFrame([r.to_json() for r in results], columns=['suite', 'name', 'passed', 'detail'])
