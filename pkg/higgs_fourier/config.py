"""
Run-time defaults read from the environment (and a .env file if present).
"""

import os
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .errors import ConfigError

# Load environment variables from .env file
load_dotenv()

SignConvention = Literal["plus", "minus"]
OutputFormat = Literal["json", "csv", "text"]


class Settings(BaseModel):
    """Defaults for every command-line flag that has an environment variable."""
    prime: int = Field(101, ge=3)
    samples: int = Field(25, ge=0)
    seed: int = 0
    degree_bound: int = Field(2, ge=0)
    sign_convention: SignConvention = "plus"
    log_level: str = "INFO"
    log_dir: Optional[str] = None

    @classmethod
    def from_env(cls) -> "Settings":
        raw = {
            "prime": os.getenv("HIGGS_FOURIER_PRIME"),
            "samples": os.getenv("HIGGS_FOURIER_SAMPLES"),
            "seed": os.getenv("HIGGS_FOURIER_SEED"),
            "degree_bound": os.getenv("HIGGS_FOURIER_DEGREE_BOUND"),
            "sign_convention": os.getenv("HIGGS_FOURIER_SIGN_CONVENTION"),
            "log_level": os.getenv("LOG_LEVEL", "INFO").upper(),
            "log_dir": os.getenv("HIGGS_FOURIER_LOG_DIR") or None,
        }
        try:
            return cls(**{k: v for k, v in raw.items() if v is not None})
        except ValidationError as e:
            raise ConfigError(f"Invalid environment configuration: {e}")
