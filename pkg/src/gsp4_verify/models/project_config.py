"""
Configurazione per progetto via .gsp4-verify.yml.

Carica un file YAML opzionale dalla directory di lavoro per definire
defaults del progetto: precisione, formato output, limiti delle griglie, seed.

Richiede PyYAML come dipendenza opzionale:
    pip install gsp4-verify[config]
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from gsp4_verify.models.config import DEFAULT_MAX_DEGREE, DEFAULT_PRECISION_DIGITS, MELLIN_GRID_MAX

# Nome del file di configurazione cercato nella directory corrente
CONFIG_FILENAME = ".gsp4-verify.yml"
CONFIG_FILENAME_ALT = ".gsp4-verify.yaml"


@dataclass
class PrecisionConfig:
    """Cifre significative per il lavoro numerico."""

    digits: int = DEFAULT_PRECISION_DIGITS


@dataclass
class OutputConfig:
    """Defaults di output per tutti i comandi."""

    format: str = "text"
    output: Optional[str] = None


@dataclass
class BoundsConfig:
    """Limiti di dimensione."""

    max_degree: int = DEFAULT_MAX_DEGREE
    grid_max: int = MELLIN_GRID_MAX


@dataclass
class RunConfig:
    seed: Optional[int] = None


@dataclass
class ProjectConfig:
    """Configurazione completa del progetto."""

    precision: PrecisionConfig = field(default_factory=PrecisionConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    bounds: BoundsConfig = field(default_factory=BoundsConfig)
    run: RunConfig = field(default_factory=RunConfig)


def _is_yaml_available() -> bool:
    """Verifica se PyYAML è installato."""
    try:
        import yaml  # noqa: F401

        return True
    except ImportError:
        return False


def find_config_file(start_dir: Optional[Path] = None) -> Optional[Path]:
    """Cerca prima .gsp4-verify.yml, poi .gsp4-verify.yaml."""
    search_dir = start_dir or Path.cwd()

    for name in (CONFIG_FILENAME, CONFIG_FILENAME_ALT):
        config_path = search_dir / name
        if config_path.is_file():
            return config_path

    return None


def load_config(config_path: Optional[Path] = None) -> ProjectConfig:
    """Carica configurazione da file YAML.

    Ritorna ProjectConfig con defaults se il file non esiste, PyYAML non è
    installato o il contenuto non è valido.
    """
    if config_path is None:
        config_path = find_config_file()

    if config_path is None:
        return ProjectConfig()

    if not _is_yaml_available():
        return ProjectConfig()

    import yaml

    try:
        raw = yaml.safe_load(Path(config_path).read_text(encoding="utf-8"))
    except (yaml.YAMLError, OSError):
        return ProjectConfig()

    if not isinstance(raw, dict):
        return ProjectConfig()

    return _parse_config(raw)


def _int_or(value, default: int) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        return default


def _parse_config(raw: dict) -> ProjectConfig:
    """Converte dizionario YAML in ProjectConfig tipizzato."""
    config = ProjectConfig()

    # Sezione precision
    precision_raw = raw.get("precision", {})
    if isinstance(precision_raw, dict):
        config.precision = PrecisionConfig(digits=_int_or(precision_raw.get("digits"), DEFAULT_PRECISION_DIGITS))

    # Sezione output
    output_raw = raw.get("output", {})
    if isinstance(output_raw, dict):
        config.output = OutputConfig(
            format=str(output_raw.get("format", "text")),
            output=output_raw.get("output"),
        )

    # Sezione bounds
    bounds_raw = raw.get("bounds", {})
    if isinstance(bounds_raw, dict):
        config.bounds = BoundsConfig(
            max_degree=_int_or(bounds_raw.get("max_degree"), DEFAULT_MAX_DEGREE),
            grid_max=_int_or(bounds_raw.get("grid_max"), MELLIN_GRID_MAX),
        )

    # Sezione run
    run_raw = raw.get("run", {})
    if isinstance(run_raw, dict):
        seed = run_raw.get("seed")
        config.run = RunConfig(seed=None if seed is None else _int_or(seed, 0))

    return config
