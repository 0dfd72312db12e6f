import java.util.ArrayList;
import java.util.Random;

/**
 * Inventory50 program.
 */
public class Inventory50 {
  static final int LIMIT = 35;

  static int[] fillRandom(int size) {
    Random rand = new Random(42);
    int[] scores = new int[size];
    for (int idx = 0; idx < size; idx++) {
      scores[idx] = rand.nextInt(100);
    }
    return scores;
  }

  static int countVowels(String line) {
    int found = 0;
    for (int idx = 0; idx < line.length(); idx++) {
      char ch = Character.toLowerCase(line.charAt(idx));
      switch (ch) {
        case 'a':
        case 'e':
        case 'i':
        case 'o':
        case 'u':
        found++;
        break;
        default:
        break;
      }
    }
    return found;
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

  static ArrayList<Integer> collectEven(int[] scores) {
    ArrayList<Integer> items = new ArrayList<>();
    for (int v : scores) {
      if (v % 2 == 0) {
        items.add(v);
      }
    }
    return items;
  }

  static char grade(int mark) {
    if (mark >= 90) {
      return 'A';
    } else if (mark >= 80) {
      return 'B';
    } else if (mark >= 70) {
      return 'C';
    } else {
      return 'F';
    }
  }

  public static double bodyMassIndex(double kg, double meters) {
    double value = kg / Math.pow(meters, 2);
    return Math.round(value * 10) / 10.0;
  }

  static void countDown(int n) {
    do {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  public static int sumDigits(int n) {
    int sum = 0;
    while (n > 0) {
      sum += n % 10;
      n /= 10;
    }
    return sum;
  }

  public static double toFahrenheit(double degrees) {
    return degrees * 9 / 5 + 32;
  }

  public static void main(String[] args) {
    int[] numbers = {4, 8, 7, 2, 7, 5, 3};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    int[] random = fillRandom(3);
    System.out.println(random.length);
    System.out.println(countVowels("hello world"));
    System.out.println(isPalindrome("hello"));
    ArrayList<Integer> even = collectEven(numbers);
    System.out.println(even.size() + " even numbers");
    System.out.println("Grade: " + grade(70));
    System.out.println("BMI: " + bodyMassIndex(74.5, 1.55));
    countDown(4);
    System.out.println("Digits: " + sumDigits(17821));
    System.out.println(toFahrenheit(20.0));
  }
}
