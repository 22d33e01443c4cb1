"""
Append-only CSV persistence for filtration cache entries
"""

import logging
from pathlib import Path
from typing import Dict, Tuple, Union

import pandas as pd

from src.algebra.monomial import MonomialIdeal, minimalize
from src.hilbert.colength import colength

logger = logging.getLogger(__name__)

COLUMNS = ["key", "closed", "exponents", "generators", "colength"]


def _encode_vector(vector) -> str:
    return " ".join(str(int(e)) for e in vector)


def _decode_vector(text: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in text.split())


class CacheStore:
    """
    Filtration entries stored as CSV rows

    Each row holds the canonical key of the ideal tuple, the filtration
    mode, the exponent tuple, the minimal generators and the colength.
    Integers are written as decimal strings.
    """

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def _read(self) -> pd.DataFrame:
        if not self.path.exists():
            return pd.DataFrame(columns=COLUMNS)
        try:
            df = pd.read_csv(self.path, dtype=str, keep_default_na=False, on_bad_lines="skip")
        except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            logger.warning(f"Ignoring unreadable cache file {self.path}: {e}")
            return pd.DataFrame(columns=COLUMNS)

        missing = [column for column in COLUMNS if column not in df.columns]
        if missing:
            logger.warning(f"Ignoring cache file {self.path} without columns {missing}")
            return pd.DataFrame(columns=COLUMNS)
        return df

    def load(self, cache) -> Dict[Tuple[int, ...], Tuple[MonomialIdeal, int]]:
        """
        Entries recorded for the cache's ideal tuple and mode

        Rows that fail to parse, or whose colength disagrees with the
        stored generators, are skipped with a warning.
        """
        df = self._read()
        rows = df[(df["key"] == cache.key) & (df["closed"] == str(cache.closed))]

        entries = {}
        skipped = 0
        for row in rows.itertuples(index=False):
            try:
                point = cache.check_point(_decode_vector(row.exponents))
                generators = [
                    cache.ring.check(_decode_vector(part))
                    for part in row.generators.split(";") if part.strip()
                ]
                ideal = minimalize(cache.ring, generators)
                length = int(row.colength)
                if ideal.pure_power_bounds() is None or colength(ideal) != length:
                    raise ValueError(f"colength {length} does not match {ideal}")
            except (ValueError, TypeError, AttributeError) as e:
                skipped += 1
                logger.warning(f"Skipping corrupt cache record for {cache.key}: {e}")
                continue
            entries[point] = (ideal, length)

        logger.info(f"Loaded {len(entries)} cached entries for {cache.key} ({skipped} skipped)")
        return entries

    def append(self, cache, point: Tuple[int, ...], ideal: MonomialIdeal, length: int) -> None:
        row = pd.DataFrame([{
            "key": cache.key,
            "closed": str(cache.closed),
            "exponents": _encode_vector(point),
            "generators": ";".join(_encode_vector(g) for g in ideal.generators),
            "colength": str(length),
        }], columns=COLUMNS)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fresh = not self.path.exists() or self.path.stat().st_size == 0
        row.to_csv(self.path, mode="a", header=fresh, index=False)
