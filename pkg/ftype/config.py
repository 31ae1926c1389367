from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Settings:
    """Numerical tolerances and retry budgets of the representation pipeline.

    The defaults reproduce the acceptance thresholds; the CLI overrides them
    through `--tol`, `--margin` and `--retries`.
    """

    # |det - 1| and relation residuals of constructed matrices
    residual: float = 1e-9
    # minimum |tr[A,B] - 2| and distance from ±I counted as a decision
    margin: float = 1e-6
    # word-problem cross-check: trivial words must map within this of ±I ...
    trivial: float = 1e-8
    # ... and nontrivial words at least this far away
    nontrivial: float = 1e-4
    # |f(t0) - target| accepted for a polished root
    root_residual: float = 1e-8
    factor_retries: int = 32
    quotient_retries: int = 8
    elementarity_samples: int = 50

    def replace(self, **changes) -> 'Settings':
        return replace(self, **changes)


DEFAULT_SETTINGS = Settings()
