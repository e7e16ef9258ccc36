"""
Configuration settings for the mtcdef toolkit
"""
import os
from pathlib import Path
from dotenv import load_dotenv


env_path = Path(__file__).parent.parent.parent / ".env.local"
load_dotenv(dotenv_path=env_path)


def _flag(name: str, default: str = "False") -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


class Settings:
    """Toolkit settings"""

    # Verification
    SAMPLES: int = int(os.getenv("MTCDEF_SAMPLES", "100000"))
    SEED: int = int(os.getenv("MTCDEF_SEED", "1"))

    # Execution
    PARALLELISM: int = int(os.getenv("MTCDEF_PARALLELISM", "1"))
    PROGRESS: bool = _flag("MTCDEF_PROGRESS")
    VERBOSE: bool = _flag("MTCDEF_VERBOSE")

    # Cache directory for verified categories (content-hash markers)
    CACHE_DIR: str = os.getenv("MTCDEF_CACHE", "")

    # Application Info
    APP_TITLE: str = "mtcdef"
    APP_DESCRIPTION: str = "Exact modular tensor categories, Frobenius algebras and surface defects"
    APP_VERSION: str = os.getenv("APP_VERSION", "1.0.0")

    def __init__(self):
        self.env_loaded = env_path.exists()

    @property
    def cache_path(self):
        """Cache directory as a Path, or None when caching is off"""
        return Path(self.CACHE_DIR) if self.CACHE_DIR else None


settings = Settings()
