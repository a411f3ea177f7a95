"""
Resumable X_n sweep for CRON or long unattended runs

File: scripts/check_conjecture.py

Usage in CRON (resumes from the checkpoint until the grid is done):
*/30 * * * * cd /path/to/mgf-fourier && /usr/bin/python3 scripts/check_conjecture.py --max-a1 20 >> logs/cron.log 2>&1
"""

import json
import logging
import sys
from datetime import datetime, timedelta
from pathlib import Path
from typing import Dict, Optional

# Add the project root to Python path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from mgf_fourier.analysis.sweep import run_sweep
from mgf_fourier.exact import set_table_size
from mgf_fourier.utils import load_settings, setup_logging


class ConjectureSweeper:
    """Runs the X_n grid sweep with checkpoints, file logging and run metadata"""

    def __init__(self, max_a1: int = 12, max_a23: int = 12, jobs: Optional[int] = None,
                 data_dir: str = None, log_dir: str = None, checkpoint_dir: str = None):
        """
        Initialize the sweeper

        Args:
            max_a1, max_a23: Grid bounds
            jobs: Worker processes (default: MGF_JOBS or the CPU count)
            data_dir: Directory for run metadata (default: MGF_DATA_DIR)
            log_dir: Directory for log files (default: MGF_LOG_DIR)
            checkpoint_dir: Directory for the resumable state (default: MGF_CHECKPOINT_DIR)
        """
        settings = load_settings()
        set_table_size(settings.table_size)
        self.max_a1 = max_a1
        self.max_a23 = max_a23
        self.jobs = jobs or settings.jobs
        self.checkpoint_every = settings.checkpoint_every

        self.data_dir = Path(data_dir) if data_dir else project_root / settings.data_dir
        self.log_dir = Path(log_dir) if log_dir else project_root / settings.log_dir
        self.checkpoint_dir = (
            Path(checkpoint_dir) if checkpoint_dir else project_root / settings.checkpoint_dir
        )
        for directory in (self.data_dir, self.log_dir, self.checkpoint_dir):
            directory.mkdir(parents=True, exist_ok=True)

        self.logger = setup_logging("ConjectureSweeper", self.log_dir, stream=sys.stdout)
        # route library progress into the same handlers
        library = logging.getLogger("mgf_fourier")
        library.setLevel(logging.INFO)
        # Remove existing handlers to avoid duplicates
        for handler in library.handlers[:]:
            library.removeHandler(handler)
        for handler in self.logger.handlers:
            library.addHandler(handler)

        self.logger.info("=== Conjecture Sweep Started ===")
        self.logger.info(f"Grid: 2 <= a1 <= {max_a1}, 1 <= a2, a3 <= {max_a23}")
        self.logger.info(f"Workers: {self.jobs}")

    @property
    def checkpoint_path(self) -> Path:
        return self.checkpoint_dir / f"xn_{self.max_a1}_{self.max_a23}.json"

    def save_run_metadata(self, result: Dict):
        """Save metadata about the run for tracking"""
        metadata = {
            'run_date': datetime.now().isoformat(),
            'grid': {'max_a1': self.max_a1, 'max_a23': self.max_a23},
            'jobs': self.jobs,
            'result': result,
            'sweeper_version': '1.0'
        }

        stamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        metadata_file = self.data_dir / f"xn_sweep_{self.max_a1}_{self.max_a23}_{stamp}.json"

        with open(metadata_file, 'w') as f:
            json.dump(metadata, f, indent=2, default=str)

        self.logger.info(f"Run metadata saved: {metadata_file.name}")
        return metadata_file

    def cleanup_old_logs(self, keep_days: int = 30):
        """Clean up log files older than specified days"""
        cutoff_date = datetime.now() - timedelta(days=keep_days)

        for log_file in self.log_dir.glob("*.log"):
            try:
                file_time = datetime.fromtimestamp(log_file.stat().st_mtime)
                if file_time < cutoff_date:
                    log_file.unlink()
                    self.logger.info(f"Cleaned up old log: {log_file.name}")
            except OSError as e:
                self.logger.warning(f"Could not clean up {log_file.name}: {e}")

    def run(self, fresh: bool = False, inject_fault: bool = False) -> Dict:
        """
        Main run method

        Args:
            fresh: Discard an existing checkpoint and start over
            inject_fault: Corrupt one cell to check that violations are reported

        Returns:
            Execution result
        """
        try:
            self.cleanup_old_logs()
            if fresh and self.checkpoint_path.exists():
                self.checkpoint_path.unlink()
                self.logger.info("Discarded existing checkpoint")

            started = datetime.now()
            summary = run_sweep(
                self.max_a1, self.max_a23, self.jobs,
                checkpoint_path=self.checkpoint_path,
                checkpoint_every=self.checkpoint_every,
                inject_fault=inject_fault,
            )
            result = summary.to_dict()
            result['seconds'] = (datetime.now() - started).total_seconds()
            if summary.table is not None:
                result['per_a1'] = summary.table.to_dict(orient='records')

            if summary.success:
                self.logger.info(f"All {summary.cells} cells vanish")
            else:
                result['error'] = f"{len(summary.violations)} nonzero X_n"
                self.logger.error(f"Sweep found violations: {result['error']}")

            self.save_run_metadata(result)
            self.logger.info("=== Conjecture Sweep Finished ===")
            return result

        except Exception as e:
            self.logger.error(f"Critical error in sweep: {str(e)}")
            return {
                'success': False,
                'error': f'Critical error: {str(e)}',
                'grid': {'max_a1': self.max_a1, 'max_a23': self.max_a23},
            }


def main():
    """Main function for CRON execution"""
    import argparse

    parser = argparse.ArgumentParser(description='Resumable X_n vanishing sweep')
    parser.add_argument('--max-a1', type=int, default=12, help='Largest a1 (default: 12)')
    parser.add_argument('--max-a23', type=int, default=12,
                        help='Largest a2 and a3 (default: 12)')
    parser.add_argument('--jobs', type=int, help='Worker processes (default: MGF_JOBS)')
    parser.add_argument('--data-dir', help='Directory for run metadata')
    parser.add_argument('--log-dir', help='Directory for log files')
    parser.add_argument('--checkpoint-dir', help='Directory for the resumable state')
    parser.add_argument('--fresh', action='store_true', help='Ignore an existing checkpoint')
    parser.add_argument('--inject-fault', action='store_true',
                        help='Corrupt one cell (harness self-test)')

    args = parser.parse_args()

    sweeper = ConjectureSweeper(
        max_a1=args.max_a1, max_a23=args.max_a23, jobs=args.jobs,
        data_dir=args.data_dir, log_dir=args.log_dir, checkpoint_dir=args.checkpoint_dir,
    )
    result = sweeper.run(fresh=args.fresh, inject_fault=args.inject_fault)

    # Exit with appropriate code for CRON monitoring
    if result['success']:
        sys.exit(0)
    elif 'violations' in result:
        sys.exit(5)
    else:
        sys.exit(1)


if __name__ == "__main__":
    main()
