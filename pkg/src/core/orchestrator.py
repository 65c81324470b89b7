"""
Round check orchestrator.

Async front for the checking kernels. Independent sub-checks (the two
directions of a fixed-k equivalence, the generator checks of a symmetry) run
concurrently in worker threads; each existential sweep runs in one worker
so its log stays in ascending k.
"""

import asyncio
from collections.abc import Callable
from functools import partial
from typing import TypeVar

from src.config.settings import Settings, get_settings
from src.core.errors import AutomatonInputError
from src.core.existential import existential_equivalence, existential_search
from src.core.simulation import RoundSimulationChecker, fixed_round_simulates
from src.core.symmetry import (
    existential_symmetry,
    is_round_symmetric_wrt,
    process_count,
    symmetry_generators,
)
from src.models.automata import Nfa, Transducer
from src.models.profiles import TypeProfile
from src.models.symmetry import Permutation
from src.models.verdicts import (
    EquivalenceVerdict,
    ExistentialEquivalenceVerdict,
    ExistentialSymmetryVerdict,
    ExistentialVerdict,
    GeneratorCheck,
    SimulationVerdict,
    SymmetryVerdict,
)

T = TypeVar("T")


class RoundCheckOrchestrator:
    """
    Coordinates simulation, equivalence, existential and symmetry checks.

    Options default to the settings and can be overridden per instance.
    """

    def __init__(
        self,
        settings: Settings | None = None,
        *,
        antichain: bool | None = None,
        quotient_cap: int | None = None,
        verify_reuse: bool | None = None,
    ):
        self.settings = settings or get_settings()
        self.antichain = self.settings.antichain if antichain is None else antichain
        self.quotient_cap = self.settings.quotient_cap if quotient_cap is None else quotient_cap
        self.verify_reuse = self.settings.verify_reuse if verify_reuse is None else verify_reuse

    async def _run(self, func: Callable[..., T], *args, **kwargs) -> T:
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(None, partial(func, *args, **kwargs))

    # =========================================================================
    # FIXED k
    # =========================================================================

    async def simulation(
        self, t1: Transducer, t2: Transducer, lambda_nfa: Nfa | None, k: int
    ) -> SimulationVerdict:
        return await self._run(
            fixed_round_simulates,
            t1,
            t2,
            lambda_nfa,
            k,
            antichain=self.antichain,
            quotient_cap=self.quotient_cap,
        )

    async def equivalence(
        self, t1: Transducer, t2: Transducer, lambda_nfa: Nfa | None, k: int
    ) -> EquivalenceVerdict:
        """Both directions concurrently."""
        forward, backward = await asyncio.gather(
            self.simulation(t1, t2, lambda_nfa, k),
            self.simulation(t2, t1, lambda_nfa, k),
        )
        return EquivalenceVerdict(forward=forward, backward=backward)

    # =========================================================================
    # EXISTENTIAL
    # =========================================================================

    async def existential(
        self, t1: Transducer, t2: Transducer, lambda_nfa: Nfa | None, k_max: int
    ) -> ExistentialVerdict:
        return await self._run(
            existential_search,
            t1,
            t2,
            lambda_nfa,
            k_max,
            antichain=self.antichain,
            quotient_cap=self.quotient_cap,
            verify_reuse=self.verify_reuse,
        )

    async def existential_equivalence(
        self, t1: Transducer, t2: Transducer, lambda_nfa: Nfa | None, k_max: int
    ) -> ExistentialEquivalenceVerdict:
        return await self._run(
            existential_equivalence,
            t1,
            t2,
            lambda_nfa,
            k_max,
            antichain=self.antichain,
            quotient_cap=self.quotient_cap,
            verify_reuse=self.verify_reuse,
        )

    # =========================================================================
    # SYMMETRY
    # =========================================================================

    async def symmetry(
        self, t: Transducer, k: int, permutations: list[Permutation] | None = None
    ) -> SymmetryVerdict:
        """
        Round symmetry at k, one worker per permutation.

        Without explicit permutations the two generators of the symmetric
        group are checked.
        """
        m = process_count(t)
        if m < 2:
            raise AutomatonInputError("symmetry needs at least two processes")
        perms = permutations or symmetry_generators(m)
        verdicts = await asyncio.gather(
            *(
                self._run(
                    is_round_symmetric_wrt,
                    t,
                    pi,
                    k,
                    antichain=self.antichain,
                    quotient_cap=self.quotient_cap,
                )
                for pi in perms
            )
        )
        checks = [
            GeneratorCheck(permutation=pi.cycle_notation, verdict=verdict)
            for pi, verdict in zip(perms, verdicts)
        ]
        return SymmetryVerdict(k=k, m=m, checks=checks)

    async def existential_symmetry(self, t: Transducer, k_max: int) -> ExistentialSymmetryVerdict:
        return await self._run(
            existential_symmetry,
            t,
            k_max,
            antichain=self.antichain,
            quotient_cap=self.quotient_cap,
            verify_reuse=self.verify_reuse,
        )

    async def profiles(
        self, t1: Transducer, t2: Transducer, lambda_nfa: Nfa | None, ks: list[int]
    ) -> dict[int, TypeProfile]:
        """Type profiles of the left acceptor at each k, sharing one type table."""

        def compute() -> dict[int, TypeProfile]:
            checker = RoundSimulationChecker(
                t1, t2, lambda_nfa, antichain=self.antichain, quotient_cap=self.quotient_cap
            )
            return {k: checker.profile(k) for k in ks}

        return await self._run(compute)
