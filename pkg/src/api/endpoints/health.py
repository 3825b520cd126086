"""Health check endpoints."""

from datetime import datetime, timezone

from fastapi import APIRouter

from src.config.settings import settings
from src.models.field import RATIONALS
from src.services.betti import regularity
from src.services.ideals import minimize

router = APIRouter()


@router.get("/health")
async def health_check():
    """Basic health check endpoint."""
    return {
        "status": "healthy",
        "version": settings.app_version,
        "timestamp": datetime.now(timezone.utc).isoformat()
    }


@router.get("/health/ready")
async def readiness_check():
    """Readiness check: the exact-rank backend answers a Koszul anchor."""
    ready = int(regularity(minimize([(2, 0), (0, 2)], 2), RATIONALS)) == 3
    return {
        "status": "ready" if ready else "degraded",
        "timestamp": datetime.now(timezone.utc).isoformat()
    }
