from pyellcop.cli.ingest import InputFormat, Ingested, ingest
from pyellcop.cli.main import main

__all__ = ["InputFormat", "Ingested", "ingest", "main"]
