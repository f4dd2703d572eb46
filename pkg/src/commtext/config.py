"""Flat key=value run configuration with command-line overrides."""

from __future__ import annotations

from pathlib import Path

from .errors import ConfigError

__all__ = ["RunConfig", "DEFAULTS"]

DEFAULTS: dict[str, str] = {
    "edges": "",
    "tweets": "",
    "embeddings": "builtin-hash:1024",
    "out": "out",
    "algorithms": "louvain,bec,infomap",
    "louvain_grid": "1.0",
    "louvain_param": "c",
    "bec_grid": "1.0",
    "min_degree": "3",
    "n_cut": "5",
    "quantile": "0.75",
    "n_train": "500",
    "n_test": "1000",
    "weights": "1,1,3,2",
    "betas": "0.1,0.25,0.75",
    "seed": "42",
    "workers": "1",
    "tracked": "",
    "save_models": "false",
    "eig_tol": "1e-10",
    "eig_max_iter": "1000",
    "synth_communities": "4",
    "synth_nodes": "250",
    "synth_p_in": "0.1",
    "synth_p_out": "0.002",
    "synth_weight_dist": "uniform:1,3",
    "synth_tweets": "poisson:50",
    "synth_tokens": "poisson:11",
    "synth_vocab": "400",
    "synth_mu_text": "0.05",
}


class RunConfig:
    def __init__(self, values: dict[str, str]):
        self.values = values

    @classmethod
    def load(cls, path: str | Path | None, overrides: list[str] | None = None) -> "RunConfig":
        values = dict(DEFAULTS)
        if path is not None:
            text = Path(path).read_text(encoding="utf-8")
            for lineno, raw in enumerate(text.splitlines(), start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value, got {line!r}")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in DEFAULTS:
                    raise ConfigError(f"{path}:{lineno}: unknown config key {key!r}")
                values[key] = value.strip()
        for item in overrides or []:
            if "=" not in item:
                raise ConfigError(f"--set expects key=value, got {item!r}")
            key, _, value = item.partition("=")
            key = key.strip()
            if key not in DEFAULTS:
                raise ConfigError(f"--set: unknown config key {key!r}")
            values[key] = value.strip()
        return cls(values)

    def raw(self, key: str) -> str:
        return self.values[key]

    def set(self, key: str, value: str) -> None:
        if key not in DEFAULTS:
            raise ConfigError(f"unknown config key {key!r}")
        self.values[key] = value

    def str_(self, key: str) -> str:
        return self.values[key]

    def int_(self, key: str) -> int:
        try:
            return int(self.values[key])
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {self.values[key]!r}") from None

    def float_(self, key: str) -> float:
        try:
            return float(self.values[key])
        except ValueError:
            raise ConfigError(f"{key} must be a number, got {self.values[key]!r}") from None

    def bool_(self, key: str) -> bool:
        value = self.values[key].lower()
        if value in ("true", "1", "yes"):
            return True
        if value in ("false", "0", "no", ""):
            return False
        raise ConfigError(f"{key} must be a boolean, got {self.values[key]!r}")

    def list_(self, key: str) -> list[str]:
        value = self.values[key].strip()
        if not value:
            return []
        return [item.strip() for item in value.split(",") if item.strip()]

    def float_list(self, key: str) -> list[float]:
        try:
            return [float(item) for item in self.list_(key)]
        except ValueError:
            raise ConfigError(f"{key} must be a comma list of numbers, got {self.values[key]!r}") from None

    def int_list(self, key: str) -> list[int]:
        try:
            return [int(item) for item in self.list_(key)]
        except ValueError:
            raise ConfigError(f"{key} must be a comma list of integers, got {self.values[key]!r}") from None

    def validate_common(self) -> None:
        if self.int_("n_cut") < 2:
            raise ConfigError("n_cut must be >= 2")
        q = self.float_("quantile")
        if not 0.0 < q < 1.0:
            raise ConfigError(f"quantile must be in (0, 1), got {q}")
        weights = self.int_list("weights")
        if len(weights) != 4 or sum(weights) != 7 or any(w <= 0 for w in weights):
            raise ConfigError(f"weights must be 4 positive integers summing to 7, got {weights}")
        if self.str_("louvain_param") not in ("c", "gamma"):
            raise ConfigError("louvain_param must be 'c' or 'gamma'")
