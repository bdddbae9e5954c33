"""Command-line entry points: ingest, process, render, serve, evaluate.

Exit codes: 0 success, 1 domain error (the error class name is printed
verbatim to stderr), 2 usage error. Progress goes to stdout; machine output
goes only to files.
"""

from __future__ import annotations

import functools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click

from .assembly import ALL_KINDS, build_view_payload, render_html
from .corpus import extract_article, load_story, save_story, story_from_dict
from .discordq import PipelineConfig, load_dqset, run_pipeline, save_dqset
from .errors import IoError, NewsAssemblyError, SchemaError
from .evalkit import (
    build_report,
    load_aspect_catalogs,
    load_responses,
    report_to_json,
    report_to_text,
    validate_against_catalogs,
)


def domain_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NewsAssemblyError as error:
            click.echo(f"{type(error).__name__}: {error}", err=True)
            sys.exit(1)

    return wrapper


@click.group()
def main() -> None:
    """Multi-source news assembly pipeline."""


# -- ingest -------------------------------------------------------------------


def _ingest_story_dir(story_dir: Path) -> dict:
    manifest_path = story_dir / "manifest.json"
    try:
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(f"cannot read {manifest_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{manifest_path}: invalid JSON: {exc}") from exc
    articles = []
    for entry in manifest.get("articles", []):
        if "file" in entry:
            document = (story_dir / entry["file"]).read_text(encoding="utf-8")
            article = extract_article(document, entry["url"])
        else:
            # Metadata-only entry (paywalled source known from the listing).
            article = _partial_article(entry)
        articles.append(article)
    return {
        "story_id": manifest["story_id"],
        "title": manifest["title"],
        "retrieved_at": manifest.get("retrieved_at", "1970-01-01T00:00:00+00:00"),
        "articles": [
            {
                "source_domain": a.source_domain,
                "url": a.url,
                "headline": a.headline,
                "summary": a.summary,
                "paragraphs": list(a.paragraphs),
                "is_partial": a.is_partial,
            }
            for a in articles
        ],
    }


def _partial_article(entry: dict):
    from .corpus import SourceArticle, registrable_domain

    return SourceArticle(
        source_domain=entry.get("source_domain") or registrable_domain(entry["url"]),
        url=entry["url"],
        headline=entry["headline"],
        summary=entry.get("summary"),
        paragraphs=(),
        is_partial=True,
    )


def _ingest_url_list(path: Path) -> list[dict]:
    import requests

    try:
        manifest = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from exc
    stories = []
    for story_entry in manifest:
        articles = []
        for url in story_entry["urls"]:
            response = requests.get(url, timeout=30)
            response.raise_for_status()
            article = extract_article(response.text, url)
            articles.append(article)
        stories.append(
            {
                "story_id": story_entry["story_id"],
                "title": story_entry["title"],
                "retrieved_at": story_entry.get("retrieved_at", "1970-01-01T00:00:00+00:00"),
                "articles": [
                    {
                        "source_domain": a.source_domain,
                        "url": a.url,
                        "headline": a.headline,
                        "summary": a.summary,
                        "paragraphs": list(a.paragraphs),
                        "is_partial": a.is_partial,
                    }
                    for a in articles
                ],
            }
        )
    return stories


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_dir", required=True, type=click.Path())
@domain_errors
def ingest(input_path: str, out_dir: str) -> None:
    """Build story corpus files from raw documents or a URL-list file.

    A directory input holds one subdirectory per story with a manifest.json
    and the raw HTML files; a file input is a JSON url-list and is the only
    code path that touches the network.
    """
    source = Path(input_path)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    raws: list[dict] = []
    if source.is_dir():
        for story_dir in sorted(p for p in source.iterdir() if p.is_dir()):
            raws.append(_ingest_story_dir(story_dir))
    else:
        raws = _ingest_url_list(source)
    for raw in raws:
        story = story_from_dict(raw)
        path = out / f"{story.story_id}.json"
        save_story(story, path)
        click.echo(f"{story.story_id}: {len(story.articles)} articles -> {path}")


# -- process ------------------------------------------------------------------


def _process_one(
    story_path: str, reference_dir: str | None, config: PipelineConfig, out_path: str
) -> tuple[str, dict]:
    story = load_story(story_path)
    references = []
    if reference_dir:
        for path in sorted(Path(reference_dir).glob("*.json")):
            reference = load_story(path)
            if reference.story_id != story.story_id:
                references.append(reference)
    dqset = run_pipeline(story, references, config)
    save_dqset(dqset, out_path)
    return story.story_id, dqset.pipeline_stats


@main.command(name="process")
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(exists=True))
@click.option("--reference", "reference_dir", default=None, type=click.Path(exists=True))
@click.option("--config", "config_path", default=None, type=click.Path(exists=True))
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--workers", default=None, type=int, help="Defaults to the CPU count.")
@domain_errors
def process_cmd(
    corpus_dir: str,
    reference_dir: str | None,
    config_path: str | None,
    out_dir: str,
    workers: int | None,
) -> None:
    """Run the question pipeline over every story in a corpus directory."""
    config = PipelineConfig.from_file(config_path) if config_path else PipelineConfig()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    story_paths = sorted(Path(corpus_dir).glob("*.json"))
    if not story_paths:
        raise IoError(f"no story files in {corpus_dir}")
    jobs = [
        (str(path), reference_dir, config, str(out / path.name)) for path in story_paths
    ]
    workers = workers or os.cpu_count() or 1
    results: list[tuple[str, dict]] = []
    failures: list[str] = []
    if workers == 1 or len(jobs) == 1:
        for job in jobs:
            results.append(_process_one(*job))
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            futures = [pool.submit(_process_one, *job) for job in jobs]
            for future in futures:
                try:
                    results.append(future.result())
                except NewsAssemblyError as error:
                    failures.append(f"{type(error).__name__}: {error}")
    for story_id, stats in sorted(results):
        click.echo(
            f"{story_id}: candidates={stats['candidates']} answered={stats['answered']} "
            f"qualified={stats['qualified']} kept={stats['deduplicated']}"
        )
    if failures:
        for failure in failures:
            click.echo(failure, err=True)
        sys.exit(1)


# -- render -------------------------------------------------------------------


@main.command()
@click.option("--corpus", "corpus_dir", required=True, type=click.Path(exists=True))
@click.option("--dqset", "dqset_dir", required=True, type=click.Path(exists=True))
@click.option("--story", "story_id", default="all")
@click.option("--kind", default="all")
@click.option("--format", "fmt", type=click.Choice(["json", "html"]), default="json")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option(
    "--publish",
    "publish_dir",
    default=None,
    type=click.Path(),
    help="Also write full story records into this service data directory.",
)
@domain_errors
def render(
    corpus_dir: str,
    dqset_dir: str,
    story_id: str,
    kind: str,
    fmt: str,
    out_dir: str,
    publish_dir: str | None,
) -> None:
    """Write interface payloads (or static HTML) for processed stories."""
    if kind != "all" and kind not in ALL_KINDS:
        raise click.UsageError(f"--kind must be one of {('all',) + ALL_KINDS}")
    out = Path(out_dir)
    if story_id == "all":
        story_paths = sorted(Path(corpus_dir).glob("*.json"))
    else:
        story_paths = [Path(corpus_dir) / f"{story_id}.json"]
    kinds = ALL_KINDS if kind == "all" else (kind,)
    store = None
    if publish_dir is not None:
        from .service import Store

        store = Store(publish_dir)
    for story_path in story_paths:
        story = load_story(story_path)
        dqset = load_dqset(Path(dqset_dir) / story_path.name)
        story_out = out / story.story_id
        story_out.mkdir(parents=True, exist_ok=True)
        for view_kind in kinds:
            payload = build_view_payload(view_kind, story, dqset)
            if fmt == "json":
                path = story_out / f"{view_kind}.json"
                path.write_text(
                    json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8",
                )
            else:
                path = story_out / f"{view_kind}.html"
                path.write_text(render_html(view_kind, payload, story.title), encoding="utf-8")
            click.echo(f"{story.story_id}/{view_kind} -> {path}")
        if store is not None:
            from .service import build_story_record

            store.put_story(build_story_record(story, dqset))
            click.echo(f"{story.story_id} -> published to {publish_dir}")


# -- serve --------------------------------------------------------------------


@main.command()
@click.option("--data", "data_dir", required=True, type=click.Path(exists=True))
@click.option("--addr", default="127.0.0.1:8400")
@click.option("--frontend", "frontend_dir", default=None, type=click.Path())
@domain_errors
def serve(data_dir: str, addr: str, frontend_dir: str | None) -> None:
    """Serve stored stories, views, and exercise sessions over HTTP."""
    import uvicorn

    from .service import create_app

    host, port = parse_addr(addr)
    app = create_app(data_dir, frontend_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


def parse_addr(addr: str) -> tuple[str, int]:
    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise click.UsageError(f"--addr must look like host:port, got {addr!r}")
    return host, int(port_text)


# -- evaluate -----------------------------------------------------------------


@main.command()
@click.option("--responses", "responses_path", required=True, type=click.Path(exists=True))
@click.option("--aspects", "aspects_dir", default=None, type=click.Path(exists=True))
@click.option("--seed", default=0, type=int)
@click.option("--report", "report_path", required=True, type=click.Path())
@click.option("--resamples", default=40, type=int)
@click.option("--with-replacement", is_flag=True, default=False)
@domain_errors
def evaluate(
    responses_path: str,
    aspects_dir: str | None,
    seed: int,
    report_path: str,
    resamples: int,
    with_replacement: bool,
) -> None:
    """Compute metrics, significance tests, and bootstrap curves."""
    responses = load_responses(responses_path)
    if aspects_dir:
        catalogs = load_aspect_catalogs(aspects_dir)
        validate_against_catalogs(responses, catalogs)
    report = build_report(
        responses, seed=seed, resamples=resamples, with_replacement=with_replacement
    )
    Path(report_path).parent.mkdir(parents=True, exist_ok=True)
    Path(report_path).write_text(report_to_json(report), encoding="utf-8")
    click.echo(report_to_text(report, responses))
    click.echo(f"report -> {report_path}")


if __name__ == "__main__":
    main()
