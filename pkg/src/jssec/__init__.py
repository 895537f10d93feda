"""Static analyzer for JavaScript security code smells."""
from .config import AnalyzerConfig, ConfigError, default_config, load_config
from .engine import AnalysisResult, analyze_files
from .findings import Finding, Severity, TaintStep

__version__ = "0.1.0"

__all__ = [
    "AnalysisResult",
    "AnalyzerConfig",
    "ConfigError",
    "Finding",
    "Severity",
    "TaintStep",
    "__version__",
    "analyze_files",
    "default_config",
    "load_config",
    "render_json",
    "render_sarif",
    "render_text",
]

from .reporting import render_json, render_sarif, render_text  # noqa: E402
