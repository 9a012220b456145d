"""Run one command against a deployed instance and print its report.

Usage: uv run python scripts/remote_verify.py <APP_URL> <command> [payload.json]
Example: uv run python scripts/remote_verify.py https://schur-lr.example.app repro sec32
"""
import json
import os
import sys

import httpx


def main():
    if len(sys.argv) not in (3, 4):
        print(f"Usage: {sys.argv[0]} <APP_URL> <command> [payload.json]")
        sys.exit(2)

    app_url = sys.argv[1].rstrip("/")
    command = sys.argv[2]
    headers = {}
    if token := os.environ.get("TABLEAUX_API_TOKEN"):
        headers["X-Tableaux-Token"] = token

    if command == "repro":
        if len(sys.argv) != 4:
            print("Error: repro needs an example id in place of the payload file")
            sys.exit(2)
        response = httpx.get(f"{app_url}/repro/{sys.argv[3]}", headers=headers, timeout=600)
    else:
        payload = {}
        if len(sys.argv) == 4:
            with open(sys.argv[3], encoding="utf-8") as f:
                payload = json.load(f)
        response = httpx.post(f"{app_url}/run/{command}", json=payload, headers=headers, timeout=600)

    result = response.json()
    print(json.dumps(result, indent=2, sort_keys=True))
    if response.status_code != 200:
        sys.exit(2)
    if command == "repro":
        sys.exit(0 if result.get("passed") else 1)
    sys.exit(result.get("status", 1))


if __name__ == "__main__":
    main()
