"""
Registro dei check di verifica.

I check built-in sono registrati da ``gsp4_verify.core.checks``; pacchetti
esterni possono aggiungerne altri tramite entry points
``gsp4_verify.checks`` in pyproject.toml::

    [project.entry-points."gsp4_verify.checks"]
    my_check = "my_plugin:MyCheck"

Il check deve implementare il Protocol ``VerificationCheck``.
"""

import logging
import sys
import time
from typing import Any, Dict, List, Optional, Protocol, runtime_checkable

from gsp4_verify.models.results import VerificationReport

logger = logging.getLogger(__name__)

ENTRY_POINT_GROUP = "gsp4_verify.checks"


@runtime_checkable
class VerificationCheck(Protocol):
    """Protocol per i check (PEP 544).

    ::

        class MyCheck:
            name = "my-check"
            description = "Verifica qualcosa di specifico"

            def run(self, **kwargs) -> VerificationReport:
                ...
    """

    name: str
    description: str

    def run(self, **kwargs: Any) -> VerificationReport: ...


class CheckRegistry:
    """Registry centrale dei check (built-in + plugin).

    Singleton: si usa solo tramite metodi di classe.
    """

    _checks: Dict[str, VerificationCheck] = {}
    _loaded_entry_points: bool = False

    @classmethod
    def register(cls, check: VerificationCheck) -> None:
        """Registra un check.

        Raises:
            TypeError: Se il check non implementa VerificationCheck.
            ValueError: Se un check con lo stesso nome è già registrato.
        """
        if not isinstance(check, VerificationCheck):
            raise TypeError(f"{type(check).__name__} non implementa il Protocol VerificationCheck")

        if check.name in cls._checks:
            raise ValueError(f"Check '{check.name}' già registrato")

        cls._checks[check.name] = check

    @classmethod
    def unregister(cls, name: str) -> None:
        cls._checks.pop(name, None)

    @classmethod
    def get(cls, name: str) -> Optional[VerificationCheck]:
        return cls._checks.get(name)

    @classmethod
    def all(cls) -> List[VerificationCheck]:
        return list(cls._checks.values())

    @classmethod
    def names(cls) -> List[str]:
        return list(cls._checks.keys())

    @classmethod
    def clear(cls) -> None:
        """Svuota il registry (utile nei test)."""
        cls._checks.clear()
        cls._loaded_entry_points = False

    @classmethod
    def load_entry_points(cls) -> int:
        """Carica check da entry points ``gsp4_verify.checks``; ritorna quanti ne sono stati caricati."""
        if cls._loaded_entry_points:
            return 0

        cls._loaded_entry_points = True
        loaded = 0

        from importlib.metadata import entry_points

        if sys.version_info >= (3, 10):
            eps = entry_points(group=ENTRY_POINT_GROUP)
        else:
            # Python 3.9: entry_points() ritorna un dict
            eps = entry_points().get(ENTRY_POINT_GROUP, [])

        for ep in eps:
            try:
                check_class = ep.load()
                check = check_class() if isinstance(check_class, type) else check_class
                cls.register(check)
                loaded += 1
            except Exception as e:
                # Plugin falliti non bloccano la verifica
                logger.warning("plugin %s non caricato: %s", ep.name, e)

        return loaded

    @classmethod
    def run(cls, name: str, **kwargs: Any) -> VerificationReport:
        """Esegue un check; eccezioni diventano report falliti con il messaggio."""
        check = cls._checks.get(name)
        if check is None:
            raise KeyError(f"Check '{name}' non registrato")

        start = time.perf_counter()
        try:
            report = check.run(**kwargs)
        except Exception as e:
            logger.warning("check %s raised %s", name, type(e).__name__)
            report = VerificationReport(name)
            report.fail(f"Errore nel check: {type(e).__name__}: {e}")
        report.check = name
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
        logger.info("check %s: %s in %d ms", name, report.status, report.elapsed_ms)
        return report

    @classmethod
    def run_all(cls, names: Optional[List[str]] = None, **kwargs: Any) -> List[VerificationReport]:
        """Esegue i check richiesti (default: tutti) in ordine di nome."""
        selected = sorted(names if names is not None else cls._checks.keys())
        return [cls.run(name, **kwargs) for name in selected]
