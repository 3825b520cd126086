"""Ray worker-pool configuration for corpus runs."""

from typing import Any

from pydantic import BaseModel, Field


class WorkerPoolConfig(BaseModel):
    """Configuration for the local Ray worker pool."""
    jobs: int = Field(default=1, ge=1)
    num_cpus_per_task: float = Field(default=1.0, gt=0)
    max_retries: int = Field(default=0, ge=0)
    logging_level: str = "WARNING"


def ray_init_config(pool: WorkerPoolConfig) -> dict[str, Any]:
    """Keyword arguments for ``ray.init`` on a single host."""
    return {
        "num_cpus": pool.jobs,
        "num_gpus": 0,
        "include_dashboard": False,
        "log_to_driver": False,
        "logging_level": pool.logging_level,
        "ignore_reinit_error": True,
    }
