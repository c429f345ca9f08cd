"""Size guards and the optional ``key=value`` config file."""
from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Guards:
    max_basis: int = 512
    max_tensor_dim: int = 10**5

    def unlimited(self) -> Guards:
        return replace(self, max_basis=10**18, max_tensor_dim=10**18)


DEFAULT_GUARDS = Guards()


def load_guards(path, base: Guards = DEFAULT_GUARDS) -> Guards:
    """Read ``key=value`` lines (``#`` comments allowed) overriding guard fields."""
    known = {f.name for f in fields(Guards)}
    updates = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in known:
            raise ValueError(f"{path}:{lineno}: expected one of {sorted(known)} as key=value")
        updates[key] = int(value.strip())
    return replace(base, **updates)
