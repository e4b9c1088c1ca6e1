import json
import threading

from svetlichny_core.logging import LogStreamer


def test_creates_log_directory(tmp_path):
    streamer = LogStreamer(str(tmp_path / "nested" / "dir" / "run.log"))
    assert streamer.log_file.parent.is_dir()


def test_write_json_lines(logger):
    logger.write("search started", level="info", source="search")
    line = logger.log_file.read_text(encoding="utf-8").splitlines()[0]
    entry = json.loads(line)
    assert set(entry) == {"timestamp", "level", "source", "message"}
    assert entry["source"] == "search"
    assert entry["message"] == "search started"


def test_level_helpers_and_filters(logger):
    logger.info("a", source="scheme")
    logger.success("b", source="scheme")
    logger.warning("c")
    logger.error("d", source="verify")
    assert [e["level"] for e in logger.get_recent()] == ["info", "success", "warning", "error"]
    assert [e["message"] for e in logger.get_recent(level="success")] == ["b"]
    errors = logger.get_errors()
    assert len(errors) == 1 and errors[0]["source"] == "verify"
    assert [e["message"] for e in logger.get_recent(lines=2)] == ["c", "d"]


def test_skips_corrupt_lines(logger):
    logger.info("kept")
    with open(logger.log_file, "a", encoding="utf-8") as f:
        f.write("not json\n")
    assert [e["message"] for e in logger.get_recent()] == ["kept"]


def test_clear(logger):
    logger.info("x")
    logger.clear()
    assert logger.log_file.exists()
    assert logger.get_recent() == []


def test_missing_file_reads_empty(tmp_path):
    streamer = LogStreamer(str(tmp_path / "run.log"))
    assert streamer.get_recent() == []


def test_concurrent_writes(logger):
    def worker(index):
        for k in range(50):
            logger.info(f"{index}-{k}", source="search")

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    entries = logger.get_recent(lines=1000)
    assert len(entries) == 200
    assert len({e["message"] for e in entries}) == 200
