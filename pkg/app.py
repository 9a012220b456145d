import logging

from starlette.applications import Starlette
from starlette.concurrency import run_in_threadpool
from starlette.requests import Request
from starlette.responses import JSONResponse
from starlette.routing import Route

from cli import COMMANDS, EXIT_INPUT, RunConfig, run
from config import Config, load_config
from errors import TableauError
from repro import EXAMPLES, repro
from zeta import Arithmetic

logger = logging.getLogger(__name__)

TOKEN_HEADER = "X-Tableaux-Token"


def _forbidden(request: Request, config: Config) -> JSONResponse | None:
    if config.api_token and request.headers.get(TOKEN_HEADER) != config.api_token:
        return JSONResponse({"error": "forbidden"}, status_code=403)
    return None


def _run_config(command: str, body: dict, config: Config) -> RunConfig:
    tolerance = body.pop("tolerance", None)
    return RunConfig(
        command=command,
        max_entry=int(body.pop("max_entry", config.max_entry)),
        arithmetic=Arithmetic.FLOAT if tolerance is not None else Arithmetic.EXACT,
        tolerance=float(tolerance) if tolerance is not None else config.float_tolerance,
        seed=int(body.pop("seed", 0)),
        threads=config.threads,
    )


def create_app(config: Config, store=None) -> Starlette:
    """Build the HTTP surface; `store` (a ReportStore) archives every run when given."""

    async def health(request: Request) -> JSONResponse:
        return JSONResponse({"status": "ok"})

    async def run_command(request: Request) -> JSONResponse:
        if denied := _forbidden(request, config):
            return denied
        command = request.path_params["command"]
        if command not in COMMANDS:
            return JSONResponse({"error": f"unknown command {command!r}"}, status_code=404)
        try:
            body = await request.json()
        except ValueError:
            return JSONResponse({"error": "body is not valid JSON"}, status_code=400)
        if not isinstance(body, dict):
            return JSONResponse({"error": "body must be a JSON object"}, status_code=400)
        try:
            run_config = _run_config(command, body, config)
        except (TableauError, TypeError, ValueError) as e:
            return JSONResponse({"error": str(e)}, status_code=400)

        status, report = await run_in_threadpool(run, run_config, body)
        if status == EXIT_INPUT:
            return JSONResponse(report, status_code=400)
        result = {"status": status, "report": report}
        if store is not None:
            result["archive_id"] = await run_in_threadpool(store.save, command, status, report)
        return JSONResponse(result)

    async def run_repro(request: Request) -> JSONResponse:
        if denied := _forbidden(request, config):
            return denied
        example_id = request.path_params["example_id"]
        if example_id not in EXAMPLES:
            return JSONResponse({"error": f"unknown example {example_id!r}"}, status_code=404)
        report = await run_in_threadpool(repro, example_id)
        return JSONResponse(report)

    async def list_reports(request: Request) -> JSONResponse:
        if denied := _forbidden(request, config):
            return denied
        if store is None:
            return JSONResponse({"error": "report archive is not configured"}, status_code=404)
        try:
            limit = int(request.query_params.get("limit", 20))
        except ValueError:
            return JSONResponse({"error": "limit must be an integer"}, status_code=400)
        if not 1 <= limit <= 200:
            return JSONResponse({"error": "limit must be between 1 and 200"}, status_code=400)
        stored = await run_in_threadpool(store.recent, request.query_params.get("command"), limit)
        return JSONResponse({"reports": [
            {"id": r.id, "command": r.command, "status": r.status, "created_at": r.created_at.isoformat()}
            for r in stored
        ]})

    async def get_report(request: Request) -> JSONResponse:
        if denied := _forbidden(request, config):
            return denied
        if store is None:
            return JSONResponse({"error": "report archive is not configured"}, status_code=404)
        stored = await run_in_threadpool(store.get, request.path_params["report_id"])
        if stored is None:
            return JSONResponse({"error": "not found"}, status_code=404)
        return JSONResponse({
            "id": stored.id,
            "command": stored.command,
            "status": stored.status,
            "report": stored.report,
            "created_at": stored.created_at.isoformat(),
        })

    async def on_shutdown():
        if store is not None:
            store.close()

    return Starlette(
        routes=[
            Route("/health", health, methods=["GET"]),
            Route("/run/{command}", run_command, methods=["POST"]),
            Route("/repro/{example_id}", run_repro, methods=["GET"]),
            Route("/reports", list_reports, methods=["GET"]),
            Route("/reports/{report_id:int}", get_report, methods=["GET"]),
        ],
        on_shutdown=[on_shutdown],
    )


def _build() -> Starlette:
    config = load_config()
    logging.basicConfig(level=config.log_level)
    store = None
    if config.database_url:
        from reports import ReportStore

        store = ReportStore(database_url=config.database_url)
    logger.info("Tableaux HTTP surface started (archive %s)", "on" if store else "off")
    return create_app(config, store)


app = _build()
