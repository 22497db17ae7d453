"""
Configuration management for HeckeLab runs.
"""

import os
from typing import Optional
from pydantic import BaseModel, Field
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class TrialConfig(BaseModel):
    """Sizes and seed of the randomized property checks."""
    seed: int = Field(default=20240601)
    normal_form_trials: int = Field(default=500)
    commutativity_trials: int = Field(default=100)
    arithmetic_trials: int = Field(default=1000)


class LabConfig(BaseModel):
    """Main verification configuration."""

    # Resource caps
    operation_cap: int = Field(default=10_000_000)
    orders_cap: int = Field(default=1_000_000)

    # Suite execution
    jobs: int = Field(default=1)
    trials: TrialConfig = Field(default_factory=TrialConfig)

    # Files
    fixtures_dir: str = Field(default="fixtures/v1")
    reports_dir: Optional[str] = Field(default=None)

    # Logging
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default="logs/heckelab.log")

    @classmethod
    def from_env(cls) -> "LabConfig":
        """Create configuration from environment variables."""
        return cls(
            operation_cap=int(os.getenv("HECKELAB_OPERATION_CAP", "10000000")),
            orders_cap=int(os.getenv("HECKELAB_ORDERS_CAP", "1000000")),
            jobs=int(os.getenv("HECKELAB_JOBS", "1")),
            fixtures_dir=os.getenv("HECKELAB_FIXTURES_DIR", "fixtures/v1"),
            reports_dir=os.getenv("HECKELAB_REPORTS_DIR"),
            log_level=os.getenv("HECKELAB_LOG_LEVEL", "INFO"),
            log_file=os.getenv("HECKELAB_LOG_FILE", "logs/heckelab.log") or None,
            trials=TrialConfig(
                seed=int(os.getenv("HECKELAB_SEED", "20240601")),
                normal_form_trials=int(os.getenv("HECKELAB_NF_TRIALS", "500")),
            ),
        )


# Default configuration instance
default_config = LabConfig.from_env()
