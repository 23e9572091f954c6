"""
File-based artifact storage for verification runs.

Artifacts are stored in a structured directory hierarchy:
{base_dir}/
    ├── reports/        # corpus reports (text and JSON)
    ├── witnesses/      # replayable counterexample witnesses
    ├── instances/      # instance files written by `generate`
    └── other/
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Optional

logger = logging.getLogger(__name__)

SUBDIRS = ["reports", "witnesses", "instances", "other"]


class FileArtifactService:
    """
    File-based artifact storage service.

    Each artifact is saved with:
    - Main content file (e.g., report_verify.json)
    - Metadata file (e.g., report_verify.json.meta.json)
    """

    def __init__(self, base_dir: str = "./artifacts"):
        """
        Initialize artifact service.

        Args:
            base_dir: Base directory for all artifacts (default: ./artifacts)
        """
        self.base_dir = Path(base_dir)
        self.base_dir.mkdir(parents=True, exist_ok=True)
        logger.info(f"[FileArtifactService] Initialized with base_dir: {self.base_dir}")

    def _determine_subdir(self, filename: str) -> str:
        """Determine subdirectory based on filename pattern."""
        if filename.startswith("report_"):
            return "reports"
        elif filename.startswith("witness_"):
            return "witnesses"
        elif filename.startswith("instance_"):
            return "instances"
        else:
            return "other"

    def save_artifact(self, filename: str, content: str, custom_metadata: Optional[dict] = None) -> Path:
        """
        Save artifact to disk with metadata.

        Args:
            filename: Artifact filename (determines subdirectory)
            content: Text content to save
            custom_metadata: Optional additional metadata

        Returns:
            Path of the written artifact
        """
        subdir_name = self._determine_subdir(filename)
        subdir = self.base_dir / subdir_name
        subdir.mkdir(exist_ok=True)
        file_path = subdir / filename

        try:
            file_path.write_text(content, encoding='utf-8')
            size_bytes = len(content.encode('utf-8'))
            metadata = {
                "filename": filename,
                "size_bytes": size_bytes,
                "created_at": datetime.now().isoformat(),
                "custom": custom_metadata or {}
            }
            metadata_path = file_path.with_suffix(file_path.suffix + ".meta.json")
            metadata_path.write_text(json.dumps(metadata, indent=2), encoding='utf-8')
        except OSError as e:
            logger.error(f"[FileArtifactService] Error saving artifact {filename}: {e}")
            raise

        logger.info(f"[FileArtifactService] Saved artifact: {subdir_name}/{filename} ({size_bytes} bytes)")
        return file_path

    def get_artifact_path(self, filename: str) -> Optional[Path]:
        """Full path of an existing artifact, or None."""
        for subdir_name in SUBDIRS:
            file_path = self.base_dir / subdir_name / filename
            if file_path.exists():
                return file_path
        return None

    def load_artifact(self, filename: str) -> Optional[str]:
        """Artifact text, or None if not found."""
        file_path = self.get_artifact_path(filename)
        if file_path is None:
            logger.warning(f"[FileArtifactService] Artifact not found: {filename}")
            return None
        return file_path.read_text(encoding='utf-8')

    def get_artifact_metadata(self, filename: str) -> Optional[dict]:
        """Metadata for artifact without loading full content."""
        artifact_path = self.get_artifact_path(filename)
        if not artifact_path:
            return None

        metadata_path = artifact_path.with_suffix(artifact_path.suffix + ".meta.json")
        if not metadata_path.exists():
            return None

        try:
            return json.loads(metadata_path.read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"[FileArtifactService] Error loading metadata for {filename}: {e}")
            return None

    def list_artifact_keys(self) -> List[str]:
        """Artifact paths relative to base_dir, metadata files excluded."""
        files = []
        for subdir_name in SUBDIRS:
            subdir = self.base_dir / subdir_name
            if not subdir.exists():
                continue
            for file_path in sorted(subdir.rglob("*")):
                if file_path.is_file() and not file_path.name.endswith(".meta.json"):
                    files.append(str(file_path.relative_to(self.base_dir)))

        logger.info(f"[FileArtifactService] Listed {len(files)} artifacts")
        return files
