"""Main FastAPI application."""

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from src.api.endpoints import algebra, health
from src.config.settings import configure_logging, settings
from src.models.errors import (
    DomainError,
    IdealParseError,
    MalformedInputError,
    OracleMismatchError,
    ResourceLimitError,
)

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan manager."""
    configure_logging()
    logger.info(f"Starting {settings.app_name} {settings.app_version}...")
    yield
    logger.info(f"Shutting down {settings.app_name}...")


app = FastAPI(
    title=settings.app_name,
    version=settings.app_version,
    openapi_url=f"{settings.api_prefix}/openapi.json",
    docs_url=f"{settings.api_prefix}/docs",
    redoc_url=f"{settings.api_prefix}/redoc",
    lifespan=lifespan,
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _error(status_code: int, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=status_code, content={"detail": str(exc), "error": type(exc).__name__})


@app.exception_handler(IdealParseError)
async def parse_error_handler(request: Request, exc: IdealParseError) -> JSONResponse:
    return _error(400, exc)


@app.exception_handler(DomainError)
@app.exception_handler(MalformedInputError)
async def domain_error_handler(request: Request, exc: Exception) -> JSONResponse:
    return _error(422, exc)


@app.exception_handler(ResourceLimitError)
async def resource_error_handler(request: Request, exc: ResourceLimitError) -> JSONResponse:
    return _error(413, exc)


@app.exception_handler(OracleMismatchError)
async def oracle_error_handler(request: Request, exc: OracleMismatchError) -> JSONResponse:
    logger.error(f"oracle mismatch on {request.url.path}: {exc}")
    return _error(500, exc)


# Include routers
app.include_router(
    health.router,
    prefix=settings.api_prefix,
    tags=["health"]
)

app.include_router(
    algebra.router,
    prefix=settings.api_prefix,
    tags=["algebra"]
)


@app.get("/")
async def root():
    """Root endpoint."""
    return {
        "message": f"Welcome to the {settings.app_name} API",
        "version": settings.app_version,
        "docs": f"{settings.api_prefix}/docs",
        "endpoints": {
            "health": f"{settings.api_prefix}/health",
            "compute": f"{settings.api_prefix}/compute",
            "witness": f"{settings.api_prefix}/witness",
            "check": f"{settings.api_prefix}/check",
        }
    }
