from cmath import exp, pi, sqrt
from itertools import combinations
from logging import Logger, getLogger
from typing import Iterable, Optional, Sequence

import numpy as np

from ..amalgam import Side, amalgam_power_of, is_trivial, normal_form, reduced_relator_form, split_blocks
from ..config import DEFAULT_SETTINGS, Settings
from ..errors import CiInUError, DegenerateBoundaryError, DegeneratePolynomialError, DiInV1Error, DiInVError, \
    NonDiagonalBoundaryError, NotSpecialError, NumericError, PreconditionError, RelatorInAmalgamError, \
    RelatorNotAlternatingError, RetriesExhaustedError
from ..presentation import AmalgamDecomposition, FTypePresentation, is_special, require_valid
from ..psl2 import LaurentMatrix, LaurentPolynomial, ProjectiveMatrix, elliptic_trace, irreducibility_margin, \
    mul, order_margins, solve_on_target, trace
from ..utils.cases import snake_case
from ..words import Alphabet, Word, generator, is_proper_power, multiply, order_of, power, power_exponent
from ..words.oracles import random_word
from .model import Alignment, BoundaryFamily, Certificate, CrossValidation, FactorRepresentation, \
    FaithfulnessClass, QuotientCertificate, Representation, Seed

# top and bottom trace-polynomial coefficients below this count as vanished
EXTREME = 1e-10
# relative rounding error of one matrix product, used to bound the error of a word image
ROUNDING = 1e-15

SAMPLED_PAIRS = "irreducibility is verified on sampled pairs only"
NO_FAITHFUL = "if both U and V are proper powers then there is no faithful representation in PSL(2,C)"

_PARABOLIC = ProjectiveMatrix.of(1, 1, 0, 1)


def _sequence(seed: Seed) -> np.random.SeedSequence:
    return seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)


def _random_su2(rng: np.random.Generator) -> ProjectiveMatrix:
    x = rng.normal(size=4)
    x /= np.linalg.norm(x)
    alpha, beta = complex(x[0], x[1]), complex(x[2], x[3])
    return ProjectiveMatrix.of(alpha, -beta.conjugate(), beta, alpha.conjugate())


def _random_conjugator(rng: np.random.Generator) -> ProjectiveMatrix:
    """Q diag(r, 1/r) with Q uniform in SU(2) and r in [1, 1.5]; moves both fixed points generically."""
    return mul(_random_su2(rng), ProjectiveMatrix.diagonal(rng.uniform(1.0, 1.5)))


def _loxodromic(rng: np.random.Generator) -> ProjectiveMatrix:
    tau = rng.uniform(2.6, 4.0) * exp(1j * rng.uniform(0, 2 * pi))
    return ProjectiveMatrix.diagonal((tau + sqrt(tau * tau - 4)) / 2)


def _scale(matrices: Iterable[ProjectiveMatrix]) -> float:
    return max((float(np.linalg.norm(m.entries)) for m in matrices), default=1.0)


def sample_words(presentation: FTypePresentation, count: int, max_len: int, seed: Seed) -> list[Word]:
    """Random words for the word-problem cross-check; every fifth one is a consequence of UV."""
    rng = np.random.default_rng(_sequence(seed))
    relator = presentation.relator
    words = []
    for i in range(count):
        if i % 5 == 4:
            x = random_word(presentation.alphabet, 4, rng)
            words.append(multiply(x, power(relator, int(rng.choice([-1, 1]))), ~x))
        else:
            words.append(random_word(presentation.alphabet, max_len, rng))
    return words


class Representer:
    """Builds and certifies representations of groups of F-type into PSL(2,C).

    Construction is deterministic given the presentation and the seed. Every
    result carries the residuals and margins it was accepted with.
    """

    def __init__(self, settings: Settings = DEFAULT_SETTINGS, logger: Logger = None) -> None:
        self._settings = settings

        get_logger = getLogger if logger is None else logger.getChild
        self._logger: Logger = get_logger(snake_case(self.__class__.__name__))

    @property
    def settings(self) -> Settings:
        return self._settings

    @property
    def logger(self) -> Logger:
        return self._logger

    # factors

    def rep_factor(self, alphabet: Alphabet, generators: Sequence[int], seed: Seed) -> FactorRepresentation:
        """Faithful representation of the free product of cyclics on `generators`.

        Finite generators map to elliptics of exact order e_i, infinite ones to
        loxodromics with |trace| in [2.6, 4], each conjugated by a random matrix.
        """
        generators = tuple(generators)
        if not generators:
            exception = PreconditionError("Cannot represent an empty factor")
            self._logger.error(exception)
            raise exception

        attempts = self._settings.factor_retries
        for attempt, child in enumerate(_sequence(seed).spawn(attempts), 1):
            rng = np.random.default_rng(child)
            representation = FactorRepresentation(
                alphabet,
                generators,
                {g: self._draw(alphabet.order(g), rng) for g in generators},
            )
            failure = self._factor_failure(representation)
            if failure is None:
                self._logger.debug(f"{alphabet.describe(generators)}: accepted draw {attempt}")
                return representation
            self._logger.debug(f"{alphabet.describe(generators)}: draw {attempt} rejected, {failure}")

        exception = RetriesExhaustedError(f"Representation of {alphabet.describe(generators)}", attempts)
        self._logger.error(exception)
        raise exception

    @staticmethod
    def _draw(e: int, rng: np.random.Generator) -> ProjectiveMatrix:
        m = ProjectiveMatrix.rotation(e) if e else _loxodromic(rng)
        return m.conjugate_by(_random_conjugator(rng))

    def _factor_failure(self, representation: FactorRepresentation) -> Optional[str]:
        settings = self._settings
        alphabet = representation.alphabet
        for g, m in representation.assignment.items():
            if m.distance_to_identity() <= settings.margin:
                return f"{alphabet.name(g)} maps to ±I"
            e = alphabet.order(g)
            if e:
                reached, nearest = order_margins(m, e)
                if reached > settings.residual or nearest <= settings.margin:
                    return f"{alphabet.name(g)} does not have exact order {e}"
        for g, h in combinations(representation.generators, 2):
            if irreducibility_margin(representation.assignment[g], representation.assignment[h]) <= settings.margin:
                return f"{alphabet.name(g)} and {alphabet.name(h)} share a fixed point"
        return None

    def _factor_margin(self, representation: FactorRepresentation) -> float:
        return min(
            (irreducibility_margin(representation.assignment[g], representation.assignment[h])
             for g, h in combinations(representation.generators, 2)),
            default=float('inf'),
        )

    # boundary

    def _diagonalizer(self, m: ProjectiveMatrix, first: complex = None) -> tuple[ProjectiveMatrix, complex]:
        """(P, s) with P^-1 m P = diag(s, 1/s); s is the eigenvalue closest to ±first when given."""
        tr = trace(m)
        if abs(tr * tr - 4) <= self._settings.margin:
            exception = DegenerateBoundaryError(f"Boundary image is parabolic or ±I (trace {tr:.6g})")
            self._logger.error(exception)
            raise exception
        values, vectors = np.linalg.eig(m.entries)
        order = [0, 1]
        if first is not None:
            def distance(z):
                return min(abs(z - first), abs(z + first))
            if distance(values[1]) < distance(values[0]):
                order = [1, 0]
        return ProjectiveMatrix(vectors[:, order]), complex(values[order[0]])

    def _twisted_trace(self, representation: FactorRepresentation, w: Word, g: int) -> LaurentPolynomial:
        """tr rho(w) with rho(g) replaced by T(t) rho(g) T(t)^-1, T(t) = diag(t, 1/t)."""
        product = LaurentMatrix.identity()
        for h, k in w.syllables:
            image = LaurentMatrix.constant(representation.assignment[h] ** k)
            if h == g:
                image = LaurentMatrix.diagonal_twist() @ image @ LaurentMatrix.diagonal_twist_inverse()
            product = product @ image
        return product.trace()

    def _match_trace(self, representation: FactorRepresentation, v: Word, s: complex) \
            -> tuple[FactorRepresentation, Optional[complex]]:
        """Retune the factor so that tr rho(v) = ±(s + 1/s)."""
        if len(representation.generators) == 1:
            (g, k), = v.syllables
            return representation.with_generator(g, ProjectiveMatrix.diagonal(s ** (1 / k))), None

        target = s + 1 / s
        best = None
        for g in sorted(v.generators):
            f = self._twisted_trace(representation, v, g)
            if f.is_constant:
                continue
            for t in (*solve_on_target(f, target, self._settings.root_residual),
                      *solve_on_target(f, -target, self._settings.root_residual)):
                candidate = representation.with_generator(
                    g, representation.assignment[g].conjugate_by(ProjectiveMatrix.diagonal(t)))
                if self._factor_failure(candidate) is not None:
                    continue
                tr = trace(candidate.image(v))
                score = min(self._factor_margin(candidate), abs(tr * tr - 4)) / _scale(candidate.assignment.values())
                if best is None or score > best[0]:
                    best = (score, candidate, t)
        if best is None:
            exception = DegeneratePolynomialError(f"No twist of {v} reaches trace {target:.6g}")
            self._logger.error(exception)
            raise exception
        self._logger.debug(f"matched tr rho({v}) with twist t = {best[2]:.6g}")
        return best[1], best[2]

    def _boundary_margins(self, representation: FactorRepresentation, boundary: Word) -> dict[str, float]:
        """Margins of {rho(g), rho(boundary)} for generators and their products outside <root of boundary>."""
        found = is_proper_power(boundary)
        root = boundary if found is None else found.root
        alphabet = representation.alphabet
        samples = [generator(alphabet, g) for g in representation.generators]
        samples += [multiply(x, y) for x, y in combinations(samples, 2)]
        image = representation.image(boundary)
        return {
            f"{sample} | {boundary}": irreducibility_margin(representation.image(sample), image)
            for sample in samples
            if power_exponent(sample, root) is None
        }

    def align_boundary(
            self,
            rep1: FactorRepresentation,
            u: Word,
            rep2: FactorRepresentation,
            v: Word,
    ) -> Alignment:
        """Conjugate and retune the factors so that rho_1(U^-1) = rho_2(V) = diag(s, 1/s)."""
        p, s = self._diagonalizer(rep1.image(~u))
        left = rep1.conjugated(~p).with_boundary(~u)

        right, twist = self._match_trace(rep2, v, s)
        q, _ = self._diagonalizer(right.image(v), s)
        right = right.conjugated(~q).with_boundary(v)

        residual = mul(left.image(u), right.image(v)).distance_to_identity()
        margins = {**self._boundary_margins(left, u), **self._boundary_margins(right, v)}
        self._logger.debug(f"aligned at s = {s:.6g}, residual {residual:.3g}")

        if residual > self._settings.residual:
            exception = DegenerateBoundaryError(f"Boundary alignment residual {residual:.3g} exceeds tolerance")
            self._logger.error(exception)
            raise exception
        for name, margin in margins.items():
            if margin <= self._settings.margin:
                exception = DegenerateBoundaryError(f"Pair {name} shares a fixed point (margin {margin:.3g})")
                self._logger.error(exception)
                raise exception

        return Alignment(left, right, s, twist, residual, margins)

    # whole group

    def essential_rep(self, presentation: FTypePresentation, seed: Seed = 0) -> Representation:
        """rho: G -> PSL(2,C), faithful on both factors, verified."""
        require_valid(presentation)
        decomposition = AmalgamDecomposition.of(presentation)
        faithfulness, notes = self._faithfulness(presentation)

        attempts = self._settings.factor_retries
        for attempt, child in enumerate(_sequence(seed).spawn(attempts), 1):
            left_seed, right_seed = child.spawn(2)
            try:
                alignment = self.align_boundary(
                    self.rep_factor(presentation.alphabet, decomposition.left, left_seed),
                    presentation.u,
                    self.rep_factor(presentation.alphabet, decomposition.right, right_seed),
                    presentation.v,
                )
            except (DegenerateBoundaryError, DegeneratePolynomialError) as e:
                self._logger.debug(f"attempt {attempt}: {e}")
                continue

            representation = Representation(
                presentation,
                alignment.left,
                alignment.right,
                child,
                faithfulness,
                notes=list(notes),
            )
            representation.certificate = self.verify_representation(representation)
            if representation.certificate.passed:
                return representation
            self._logger.debug(f"attempt {attempt}: certificate failed")

        exception = RetriesExhaustedError(f"Representation of {presentation.alphabet.describe()}", attempts)
        self._logger.error(exception)
        raise exception

    @staticmethod
    def _faithfulness(presentation: FTypePresentation) -> tuple[FaithfulnessClass, list[str]]:
        u_power, v_power = is_proper_power(presentation.u), is_proper_power(presentation.v)
        if u_power is None and v_power is None:
            return FaithfulnessClass.FAITHFUL, []
        if u_power is not None and v_power is not None:
            return FaithfulnessClass.ESSENTIAL_ONLY, [
                NO_FAITHFUL,
                f"rho({u_power.root}) and rho({v_power.root}) commute but {u_power.root} and {v_power.root} do not",
            ]
        word = 'U' if u_power is not None else 'V'
        return FaithfulnessClass.ESSENTIAL_ONLY, [f"{word} is a proper power; faithful on both factors"]

    # quotients

    def trace_polynomial(
            self,
            rep1: FactorRepresentation,
            rep2: FactorRepresentation,
            pairs: Sequence[tuple[Word, Word]],
            family: BoundaryFamily = BoundaryFamily.DIAGONAL,
    ) -> LaurentPolynomial:
        """f(t) = tr(rho(c_1) T rho(d_1) T^-1 ... rho(c_k) T rho(d_k) T^-1).

        T(t) = diag(t, 1/t) for a diagonal boundary and ((1, t), (0, 1)) for
        the parabolic ((1, 1), (0, 1)); either way T commutes with the boundary.
        """
        if not pairs:
            exception = PreconditionError("The trace polynomial needs at least one pair (c_i, d_i)")
            self._logger.error(exception)
            raise exception
        if rep1.boundary is None:
            exception = NonDiagonalBoundaryError("The left factor has not been aligned to a boundary")
            self._logger.error(exception)
            raise exception

        boundary = rep1.image(rep1.boundary)
        if family is BoundaryFamily.DIAGONAL:
            scale = max(1.0, abs(boundary.a), abs(boundary.d))
            if max(abs(boundary.b), abs(boundary.c)) > self._settings.residual * scale:
                exception = NonDiagonalBoundaryError(f"Boundary {boundary!r} is not diagonal")
                self._logger.error(exception)
                raise exception
            twist, twist_inverse = LaurentMatrix.diagonal_twist(), LaurentMatrix.diagonal_twist_inverse()
        else:
            if boundary.distance(_PARABOLIC) > self._settings.residual:
                exception = NonDiagonalBoundaryError(f"Boundary {boundary!r} is not ((1, 1), (0, 1))")
                self._logger.error(exception)
                raise exception
            twist, twist_inverse = LaurentMatrix.parabolic_twist(), LaurentMatrix.parabolic_twist_inverse()

        product = LaurentMatrix.identity()
        for c, d in pairs:
            product = product \
                @ LaurentMatrix.constant(rep1.image(c)) @ twist \
                @ LaurentMatrix.constant(rep2.image(d)) @ twist_inverse
        f = product.trace()
        self._logger.debug(f"trace polynomial of degree ({f.min_degree}, {f.max_degree}): {f}")
        return f

    def _quotient_route(self, presentation: FTypePresentation) -> tuple[str, Optional[Word]]:
        """'special', or 'remark' with the root V_1 of V = V_1^q."""
        if is_special(presentation):
            return 'special', None

        reason = None
        if not (presentation.n >= 4 and 2 <= presentation.p <= presentation.n - 2):
            reason = f"needs n >= 4 and 2 <= p <= n - 2, got n = {presentation.n}, p = {presentation.p}"
        elif is_proper_power(presentation.u) is not None:
            reason = f"U = {presentation.u} is a proper power"
        if reason is not None:
            exception = NotSpecialError(reason)
            self._logger.error(exception)
            raise exception
        # no generator is omitted (require_valid), so only V can be a proper power
        return 'remark', is_proper_power(presentation.v).root

    def _relator_pairs(
            self,
            relator: Word,
            decomposition: AmalgamDecomposition,
            root: Optional[Word],
    ) -> list[tuple[Word, Word]]:
        exception = None
        if not normal_form(relator, decomposition).blocks:
            exception = RelatorInAmalgamError(str(relator))
        else:
            blocks = split_blocks(relator, decomposition)
            for i, start in enumerate(range(0, len(blocks) - 1, 2), 1):
                c, d = blocks[start], blocks[start + 1]
                if c.side is not Side.LEFT:
                    break
                if amalgam_power_of(c.content, Side.LEFT, decomposition) is not None:
                    exception = CiInUError(i, str(c.content))
                elif amalgam_power_of(d.content, Side.RIGHT, decomposition) is not None:
                    exception = DiInVError(i, str(d.content))
                elif root is not None and power_exponent(d.content, root) is not None:
                    exception = DiInV1Error(i, str(d.content), str(root))
                if exception is not None:
                    break
        if exception is None:
            pairs = reduced_relator_form(relator, decomposition)
            if pairs is not None:
                return pairs
            exception = RelatorNotAlternatingError(str(relator))
        self._logger.error(exception)
        raise exception

    def quotient_rep(
            self,
            presentation: FTypePresentation,
            relator: Word,
            m: int,
            seed: Seed = 0,
    ) -> QuotientCertificate:
        """Representation of H = G / N(R^m) in which rho(R) has order exactly m."""
        if m < 2:
            exception = PreconditionError(f"m must be at least 2, got {m}")
            self._logger.error(exception)
            raise exception
        require_valid(presentation)
        route, root = self._quotient_route(presentation)
        decomposition = AmalgamDecomposition.of(presentation)
        pairs = self._relator_pairs(relator, decomposition, root)
        target = elliptic_trace(m)
        settings = self._settings

        attempts = settings.quotient_retries
        for attempt, child in enumerate(_sequence(seed).spawn(attempts), 1):
            representation = self.essential_rep(presentation, child)
            try:
                f = self.trace_polynomial(representation.left, representation.right, pairs)
            except NumericError as e:
                self._logger.debug(f"attempt {attempt}: {e}")
                continue
            k = len(pairs)
            if min(abs(f.coefficient(2 * k)), abs(f.coefficient(-2 * k))) <= EXTREME:
                self._logger.warning(f"attempt {attempt}: extreme coefficients of {f} vanish")

            roots = solve_on_target(f, target, settings.root_residual)
            best = None
            for t0 in roots:
                candidate = self._twisted(representation, t0, pairs)
                image = candidate.image(relator)
                tr = trace(image)
                trace_residual = min(abs(tr - target), abs(tr + target))
                reached, nearest = order_margins(image, m)
                order_check = reached <= settings.trivial and nearest > settings.nontrivial
                if not (order_check and trace_residual <= settings.root_residual and candidate.certificate.passed):
                    self._logger.debug(f"root t0 = {t0:.6g} rejected")
                    continue
                score = min(nearest, candidate.certificate.min_margin)
                if best is None or score > best[0]:
                    best = (score, QuotientCertificate(
                        candidate, relator, m, t0, tr, trace_residual, order_check, reached, nearest,
                        f, list(pairs), len(roots), route,
                    ))
            if best is not None:
                self._logger.info(f"rho({relator}) has order {m} at t0 = {best[1].t0:.6g}")
                return best[1]
            self._logger.debug(f"attempt {attempt}: none of {len(roots)} roots verified")

        exception = RetriesExhaustedError(f"Quotient representation with {relator}^{m} = 1", attempts)
        self._logger.error(exception)
        raise exception

    def _twisted(
            self,
            representation: Representation,
            t0: complex,
            pairs: Sequence[tuple[Word, Word]],
    ) -> Representation:
        """Conjugate the right factor by T(t0); T(t0) commutes with rho_2(V), so UV = 1 survives."""
        candidate = Representation(
            representation.presentation,
            representation.left,
            representation.right.conjugated(ProjectiveMatrix.diagonal(t0)),
            representation.seed,
            FaithfulnessClass.QUOTIENT,
            t0=t0,
            notes=list(representation.notes),
        )
        certificate = self.verify_representation(candidate)
        u, v = representation.presentation.u, representation.presentation.v
        for c, d in pairs:
            certificate.pair_margins[f"{c} | {u}"] = irreducibility_margin(candidate.image(c), candidate.image(u))
            certificate.pair_margins[f"{d} | {v}"] = irreducibility_margin(candidate.image(d), candidate.image(v))
        certificate.passed = certificate.passed and certificate.min_margin > self._settings.margin
        candidate.certificate = certificate
        return candidate

    # verification

    def verify_representation(
            self,
            representation: Representation,
            presentation: FTypePresentation = None,
            settings: Settings = None,
    ) -> Certificate:
        """Relation residuals, pair margins, boundary residual and the elementarity diagnostic."""
        presentation = presentation or representation.presentation
        settings = settings or self._settings
        alphabet = presentation.alphabet
        certificate = Certificate(notes=[SAMPLED_PAIRS])

        for g in range(presentation.n):
            m = representation.assignment[g]
            e = alphabet.order(g)
            if e:
                reached, nearest = order_margins(m, e)
                certificate.relation_residuals[f"{alphabet.name(g)}^{e}"] = reached
                certificate.order_margins[alphabet.name(g)] = nearest
            else:
                certificate.order_margins[alphabet.name(g)] = m.distance_to_identity()
        certificate.relation_residuals['UV'] = representation.image(presentation.relator).distance_to_identity()
        certificate.boundary_residual = representation.image(~presentation.u).distance(
            representation.image(presentation.v))

        for side in (representation.left, representation.right):
            for g, h in combinations(side.generators, 2):
                certificate.pair_margins[f"{alphabet.name(g)} | {alphabet.name(h)}"] = irreducibility_margin(
                    side.assignment[g], side.assignment[h])
        certificate.pair_margins.update(self._boundary_margins(representation.left, presentation.u))
        certificate.pair_margins.update(self._boundary_margins(representation.right, presentation.v))

        certificate.elementary, certificate.elementarity_samples = self._elementarity(
            representation, presentation, settings)

        certificate.passed = (
            certificate.max_residual <= settings.residual
            and certificate.boundary_residual <= settings.residual
            and certificate.min_margin > settings.margin
        )
        if not certificate.passed:
            self._logger.debug(
                f"certificate failed: residual {certificate.max_residual:.3g}, margin {certificate.min_margin:.3g}")
        return certificate

    @staticmethod
    def _elementarity(
            representation: Representation,
            presentation: FTypePresentation,
            settings: Settings,
    ) -> tuple[bool, int]:
        """Elementary when no sampled pair of infinite-order elements is irreducible."""
        rng = np.random.default_rng(_sequence(representation.seed))
        checked = 0
        elementary = True
        for _ in range(settings.elementarity_samples):
            x = random_word(presentation.alphabet, 4, rng)
            y = random_word(presentation.alphabet, 4, rng)
            if x.is_identity or y.is_identity or order_of(x).is_finite or order_of(y).is_finite:
                continue
            try:
                margin = irreducibility_margin(representation.image(x), representation.image(y))
            except NumericError:
                continue
            checked += 1
            if margin > settings.margin:
                elementary = False
        return elementary, checked

    def numeric_triviality(self, representation: Representation, w: Word) -> Optional[bool]:
        """Whether rho(w) = ±I, or None when the distance is within the rounding noise of the product.

        The noise is (relation residual + |w| ROUNDING) times the conditioning of
        the product; the trivial and nontrivial tolerances widen to 10 and 1000
        times that noise.
        """
        try:
            image, conditioning = representation.conditioned_image(w)
        except NumericError as e:
            self._logger.debug(f"{w}: {e}")
            return None
        residual = representation.certificate.max_residual if representation.certificate else 0.0
        noise = (residual + len(w) * ROUNDING) * conditioning
        distance = image.distance_to_identity()
        if distance <= max(self._settings.trivial, 10 * noise):
            return True
        if distance > max(self._settings.nontrivial, 1000 * noise):
            return False
        return None

    def cross_validate(self, representation: Representation, words: Iterable[Word]) -> CrossValidation:
        """Compare the normal-form triviality test with the numeric ±I test on every word."""
        decomposition = AmalgamDecomposition.of(representation.presentation)
        result = CrossValidation()
        for w in words:
            result.checked += 1
            numeric = self.numeric_triviality(representation, w)
            if numeric is None:
                result.undecided.append(w)
            elif numeric != is_trivial(w, decomposition):
                self._logger.warning(f"{w}: normal form and rho disagree")
                result.mismatches.append(w)
        if result.undecided:
            self._logger.info(f"{len(result.undecided)} of {result.checked} words numerically undecided")
        return result
