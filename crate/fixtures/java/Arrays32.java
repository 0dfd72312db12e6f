import java.util.Random;

/**
 * Arrays32 program.
 */
public class Arrays32 {
  static int[] randomFill(int size) {
    Random rand = new Random(42);
    int[] values = new int[size];
    for (int i = 0; i < size; i++) {
      values[i] = rand.nextInt(100);
    }
    return values;
  }

  public static boolean isPalindrome(String line) {
    int left = 0;
    int right = line.length() - 1;
    while (left < right) {
      if (line.charAt(left) != line.charAt(right)) {
        return false;
      }
      left++;
      right--;
    }
    return true;
  }

  public static double computeAverage(int[] values) {
    double result = 0;
    for (int v : values) {
      result = result + v;
    }
    return result / values.length;
  }

  static int findMax(int[] values) {
    int max = values[0];
    for (int i = 1; i < values.length; i++) {
      if (values[i] > max) {
        max = values[i];
      }
    }
    return max;
  }

  static int fib(int num) {
    int prev = 0;
    int curr = 1;
    for (int i = 0; i < num; i++) {
      int next = prev + curr;
      prev = curr;
      curr = next;
    }
    return prev;
  }

  static int gcd(int a, int b) {
    while (b != 0) {
      int t = b;
      b = a % b;
      a = t;
    }
    return a;
  }

  static char grade(int points) {
    if (points >= 90) {
      return 'A';
    } else if (points >= 80) {
      return 'B';
    } else if (points >= 70) {
      return 'C';
    } else {
      return 'F';
    }
  }

  public static void main(String[] args) {
    int[] numbers = {1, 8, 9, 9, 7, 1};
    int[] random = randomFill(4);
    System.out.println(random.length);
    System.out.println(isPalindrome("racecar"));
    double avg = computeAverage(numbers);
    System.out.println("Average: " + avg);
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    System.out.println("Fib: " + fib(7));
    System.out.println("GCD: " + gcd(33, 39));
    System.out.println("Grade: " + grade(51));
  }
}
