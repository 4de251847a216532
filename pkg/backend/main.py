"""
FastAPI backend for Dualis
Provides REST APIs for:
- Calculus management (built-in and user calculi, Stahlization)
- Proof search and proof checking
- Formula parsing, classification and sequent mirroring
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from dualis import __version__

from .core.loader import load_initial_data
from .api import calculi, proofs, formulas, misc

# Initialize FastAPI app
app = FastAPI(
    title="Dualis",
    description="Sequent calculi, their Stahlization, proof search and checking",
    version=__version__
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=False,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(calculi.router)
app.include_router(proofs.router)
app.include_router(formulas.router)
app.include_router(misc.router)

# Startup event
@app.on_event("startup")
async def startup_event():
    load_initial_data()
